#pragma once

#include <cstdint>

#include "entcoh/entangle.hpp"

namespace entcoh {

// Channel-level information quantities for qubit ensembles: the Holevo bound,
// the mutual information of a concrete measurement, and a best-effort maximum
// of the latter over measurements.

double holevo(const Ensemble& ens);

// Shannon mutual information, in bits, between the ensemble label and the
// measurement outcome.
double mutual_information(const Ensemble& ens, const Povm& povm);

enum class InfoMethod { analytic_two_pure, optimized };

struct AccessibleInfoResult {
  double value = 0.0;
  Povm optimal_povm;
  InfoMethod method = InfoMethod::optimized;
};

struct InfoOpts {
  int starts = 32;       // random restarts for the three-outcome search
  double tol = 1e-9;     // line-search tolerance on measurement angles
  std::uint64_t seed = 12345;
};

// Two equiprobable pure states are handled in closed form with the optimal
// projective measurement attached; everything else goes through the
// numerical search over two- and three-outcome rank-one measurements.
AccessibleInfoResult accessible_information(const Ensemble& ens,
                                            const InfoOpts& opts = {});

// Always runs the numerical search, even where the closed form applies.
AccessibleInfoResult accessible_information_optimized(const Ensemble& ens,
                                                      const InfoOpts& opts = {});

inline double coherence_lower_bound(double holevo_value, double accessible_value) {
  const double gap = holevo_value - accessible_value;
  return gap > 0.0 ? gap : 0.0;
}

struct UsdResult {
  Povm povm;              // detect-first, detect-second, then inconclusive
  double p_conclusive = 0.0;
  bool degenerate = false;  // states too close to discriminate at all
};

// Unambiguous discrimination of two equiprobable pure states: conclusive
// outcomes never misidentify, and the inconclusive rate is the minimal
// |<a|b>|.
UsdResult usd_povm(const PureState& a, const PureState& b);

}  // namespace entcoh
