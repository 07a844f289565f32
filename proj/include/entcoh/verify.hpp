#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "entcoh/sweep.hpp"

namespace entcoh {

// One checked claim. `measured` is the worst observed deviation divided by its
// allowed bound, so every claim passes iff measured <= tolerance (= 1).
struct ClaimResult {
  std::string id;
  std::string claim;
  double measured = 0.0;
  double tolerance = 1.0;
  bool pass = false;
  std::string detail;
};

struct VerifyOpts {
  int e_grid = 201;
  std::uint64_t seed = 12345;
  int threads = 1;
  SymOpts sym;
};

// Recomputes the headline claims from scratch and reports one result each.
// Throws std::domain_error if e_grid < 201: coarser grids cannot resolve the
// peak-location claim, so such runs would be vacuous rather than cheap.
std::vector<ClaimResult> run_verification(const VerifyOpts& opts);

}  // namespace entcoh
