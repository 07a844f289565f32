#pragma once

#include <vector>

#include "entcoh/coherence.hpp"
#include "entcoh/entangle.hpp"

namespace entcoh {

// n rank-one outcomes of weight 2/n whose directions are spread evenly over
// the real plane, anchored at the offset angle gamma.
struct SymPovmSpec {
  int n = 2;
  double gamma = 0.0;
};

Povm build_sym_povm(const SymPovmSpec& spec);  // std::domain_error for n < 2

std::vector<double> sym_probabilities(const SymPovmSpec& spec, SchmidtState state);

// Steered ensemble of the symmetric measurement in closed form; agrees with
// dual_map(state, build_sym_povm(spec)) entry by entry.
Ensemble sym_ensemble(const SymPovmSpec& spec, SchmidtState state);

struct SymOpts {
  double gamma_tol = 1e-10;  // resolution of the offset search
  double basis_tol = 1e-10;  // resolution of the inner basis search
};

struct SymOptimum {
  double gamma = 0.0;
  double coherence = 0.0;
  MeasurementBasis basis;  // minimizing basis at the reported offset
  int evals = 0;
};

// Offset maximizing the basis-free coherence; the search runs over one
// period [0, pi/n] and resolves flat stretches toward the right endpoint.
SymOptimum max_min_coherence(int n, SchmidtState state, const SymOpts& opts = {});

struct AsymptoticSplit {
  double coherence = 0.0;
  double i_acc = 0.0;
  double residual = 0.0;  // |entanglement - coherence - i_acc|
};

// Large-n split of the input entanglement between retained coherence and
// information read out by the measurement. Requires n_large >= 64.
AsymptoticSplit asymptotic_split(SchmidtState state, int n_large,
                                 const SymOpts& opts = {});

}  // namespace entcoh
