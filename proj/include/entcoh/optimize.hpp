#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace entcoh {

inline std::uint64_t mix_seed(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// mt19937_64 with manual 53-bit scaling; the engine's sequence is pinned by
// the standard, unlike std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  std::uint64_t bits() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

struct MinResult {
  double x = 0.0;
  double fx = 0.0;
  int evals = 0;
};

// Golden-section minimization on [a, b] down to interval width tol.
// Returns the better of the final interior pair.
template <class F>
MinResult golden_min(F&& f, double a, double b, double tol, int max_iter = 200) {
  constexpr double invphi = 0.6180339887498949;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  int evals = 2;
  for (int it = 0; it < max_iter && (b - a) > tol; ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
    ++evals;
  }
  return f1 <= f2 ? MinResult{x1, f1, evals} : MinResult{x2, f2, evals};
}

// Scan of m cell midpoints over [a, b]; values within tie_eps of the minimum
// tie-break toward the smallest x.
template <class F>
MinResult grid_min_midpoint(F&& f, double a, double b, int m, double tie_eps) {
  const double cell = (b - a) / m;
  double vmin = 0.0;
  int best = -1;
  std::vector<double> vals(static_cast<size_t>(m));
  for (int j = 0; j < m; ++j) {
    const double v = f(a + (j + 0.5) * cell);
    vals[static_cast<size_t>(j)] = v;
    if (best < 0 || v < vmin) {
      vmin = v;
      best = j;
    }
  }
  for (int j = 0; j < m; ++j) {
    if (vals[static_cast<size_t>(j)] <= vmin + tie_eps) {
      best = j;
      break;
    }
  }
  return MinResult{a + (best + 0.5) * cell, vals[static_cast<size_t>(best)], m};
}

// Endpoint-anchored scan (x_0 = a, x_{m-1} = b); ties toward the largest x
// when tie_high, otherwise the smallest.
template <class F>
MinResult grid_min_endpoint(F&& f, double a, double b, int m, double tie_eps,
                            bool tie_high) {
  const double step = (b - a) / (m - 1);
  double vmin = 0.0;
  std::vector<double> vals(static_cast<size_t>(m));
  for (int j = 0; j < m; ++j) {
    const double v = f(a + j * step);
    vals[static_cast<size_t>(j)] = v;
    if (j == 0 || v < vmin) vmin = v;
  }
  int best = 0;
  if (tie_high) {
    for (int j = m - 1; j >= 0; --j)
      if (vals[static_cast<size_t>(j)] <= vmin + tie_eps) {
        best = j;
        break;
      }
  } else {
    for (int j = 0; j < m; ++j)
      if (vals[static_cast<size_t>(j)] <= vmin + tie_eps) {
        best = j;
        break;
      }
  }
  return MinResult{a + best * step, vals[static_cast<size_t>(best)], m};
}

// Golden refinement around a grid candidate; keeps the candidate unless the
// refined point improves on it by more than keep_margin.
template <class F>
MinResult refine_min(F&& f, double lo, double hi, const MinResult& cand,
                     double radius, double tol, double keep_margin = 0.0) {
  const double a = std::max(lo, cand.x - radius);
  const double b = std::min(hi, cand.x + radius);
  MinResult r = golden_min(f, a, b, tol);
  r.evals += cand.evals;
  if (r.fx < cand.fx - keep_margin) return r;
  return MinResult{cand.x, cand.fx, r.evals};
}

// Grid point count from a resolution target, clamped to [4, cap].
inline int grid_points_for_tol(double span, double tol, int cap) {
  const double raw = std::ceil(span / tol) + 1.0;
  if (!(raw > 4.0)) return 4;
  if (raw >= static_cast<double>(cap)) return cap;
  return static_cast<int>(raw);
}

}  // namespace entcoh
