#pragma once

#include "entcoh/entangle.hpp"

namespace entcoh {

struct CoherenceResult {
  double value = 0.0;
  MeasurementBasis optimal_basis;
  int optimizer_iterations = 0;
};

struct BasisOpts {
  double tol = 1e-10;  // grid density and golden-section width
};

// S(rho_diag) - S(rho) with the diagonal taken in `basis`, in bits.
double relative_entropy_coherence(const DensityOperator& rho,
                                  const MeasurementBasis& basis);

// Probability-weighted average coherence; reduces to
// sum_i p_i h2(|<e1|psi_i>|^2) when every entry is pure.
double ensemble_coherence_in_basis(const Ensemble& ens,
                                   const MeasurementBasis& basis);

// Minimum of ensemble_coherence_in_basis over bases. real_plane restricts to
// phi = 0 with theta in [0, pi] (valid when all amplitudes are real);
// otherwise a 2-D (theta, phi) search runs. Basis ties resolve toward
// smaller theta.
CoherenceResult basis_free_coherence(const Ensemble& ens, bool real_plane,
                                     const BasisOpts& opts = {});

// {(delta, rho)} followed by the original entries scaled by (1 - delta).
Ensemble perturb_ensemble(const Ensemble& ens, const DensityOperator& rho,
                          double delta);

}  // namespace entcoh
