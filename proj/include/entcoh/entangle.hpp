#pragma once

#include <cstdint>
#include <vector>

#include "entcoh/qubit.hpp"

namespace entcoh {

// Two-qubit pure state cos(alpha)|00> + sin(alpha)|11>, alpha in [0, pi/2].
struct SchmidtState {
  double alpha = 0.0;
};

SchmidtState make_schmidt(double alpha);  // std::domain_error outside range

struct Rank1Element {
  double weight = 1.0;
  PureState state;
};

// Positive operators summing to identity; rank1 is non-empty only when every
// element is weight * |state><state|.
struct Povm {
  std::vector<Mat2> elements;
  std::vector<Rank1Element> rank1;
  bool has_rank1() const { return !rank1.empty(); }
  size_t size() const { return elements.size(); }
};

Povm make_povm(std::vector<Mat2> elements);
Povm make_rank1_povm(std::vector<Rank1Element> elems);
Povm computational_projectors();
Povm hadamard_projectors();

struct EnsembleEntry {
  double p = 1.0;
  DensityOperator rho;
  bool pure = false;
  PureState psi;  // meaningful only when pure
};

struct Ensemble {
  std::vector<EnsembleEntry> entries;
  bool all_pure() const;
  size_t size() const { return entries.size(); }
};

// Drops entries with p <= 1e-12, merges entries with fidelity > 1 - 1e-12,
// and checks that probabilities sum to 1 within 1e-10.
Ensemble finalize_ensemble(std::vector<EnsembleEntry> entries);

double fidelity(const DensityOperator& a, const DensityOperator& b);

// Entropy of entanglement in bits: binary_entropy(cos^2 alpha).
double entanglement(SchmidtState state);

// Inverse of entanglement on the branch alpha in [0, pi/4].
SchmidtState alpha_for_entanglement(double e);

// The ensemble steered on the far qubit by measuring the near one:
// p_i = tr(sigma_A M_i), rho_i = sqrt(sigma_B) M_i^T sqrt(sigma_B) / p_i,
// with the transpose taken in the Schmidt basis.
Ensemble dual_map(SchmidtState state, const Povm& povm);

// -sum tr(M_i rho) log2 tr(M_i rho)
double measurement_entropy(const Povm& povm, const DensityOperator& rho);

struct DecompOpts {
  int starts = 64;       // split across the 2- and 3-element searches
  double tol = 1e-9;     // coordinate golden-section width
  std::uint64_t seed = 12345;
};

// Minimum average measurement entropy over pure-state decompositions of the
// near-side reduced state. Never exceeds the eigendecomposition average.
double povm_uncertainty(const Povm& povm, SchmidtState state,
                        const DecompOpts& opts = {});

}  // namespace entcoh
