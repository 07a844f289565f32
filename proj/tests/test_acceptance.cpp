// Acceptance gate: recomputes every headline claim at the pinned settings and
// prints one pass/fail line per claim. Exits nonzero if any claim fails.
#include <cstdio>
#include <thread>
#include <vector>

#include "entcoh/verify.hpp"

int main() {
  entcoh::VerifyOpts opts;
  opts.e_grid = 201;
  opts.seed = 12345;
  opts.sym.basis_tol = 1e-10;
  opts.sym.gamma_tol = 1e-10;
  const unsigned hw = std::thread::hardware_concurrency();
  opts.threads = hw == 0 ? 1 : static_cast<int>(hw);

  const std::vector<entcoh::ClaimResult> results =
      entcoh::run_verification(opts);

  int failed = 0;
  for (size_t i = 0; i < results.size(); ++i) {
    const entcoh::ClaimResult& r = results[i];
    if (!r.pass) ++failed;
    std::printf("%s %2zu/%zu %-26s measured %.3g of allowance %.3g | %s\n",
                r.pass ? "PASS" : "FAIL", i + 1, results.size(), r.id.c_str(),
                r.measured, r.tolerance, r.claim.c_str());
    if (!r.pass) std::printf("          %s\n", r.detail.c_str());
  }
  std::printf("acceptance: %zu claims checked, %d failed\n", results.size(),
              failed);
  return failed == 0 ? 0 : 1;
}
