#include "entcoh/entangle.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "entcoh/optimize.hpp"

namespace entcoh {

namespace {

constexpr double kDropP = 1e-12;
constexpr double kMergeFidelity = 1.0 - 1e-12;

void check_povm(const std::vector<Mat2>& elements) {
  if (elements.empty()) throw invariant_error("povm has no elements");
  Mat2 sum = Mat2::Zero();
  for (const Mat2& m : elements) {
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
      throw invariant_error("povm element not Hermitian");
    if (eigen2(m).val[1] < -1e-10)
      throw invariant_error("povm element not PSD");
    sum += m;
  }
  if ((sum - Mat2::Identity()).cwiseAbs().maxCoeff() > 1e-10)
    throw invariant_error("povm elements do not sum to identity");
}

Mat2 sqrt_sigma(SchmidtState s) {
  Mat2 r = Mat2::Zero();
  r(0, 0) = std::cos(s.alpha);
  r(1, 1) = std::sin(s.alpha);
  return r;
}

Mat2 reduced_state(SchmidtState s) {
  Mat2 r = Mat2::Zero();
  r(0, 0) = std::cos(s.alpha) * std::cos(s.alpha);
  r(1, 1) = std::sin(s.alpha) * std::sin(s.alpha);
  return r;
}

}  // namespace

SchmidtState make_schmidt(double alpha) {
  if (!(alpha >= 0.0 && alpha <= M_PI / 2 + 1e-12))
    throw std::domain_error("schmidt angle outside [0, pi/2]");
  return SchmidtState{std::min(alpha, M_PI / 2)};
}

Povm make_povm(std::vector<Mat2> elements) {
  for (Mat2& m : elements) m = 0.5 * (m + m.adjoint().eval());
  check_povm(elements);
  return Povm{std::move(elements), {}};
}

Povm make_rank1_povm(std::vector<Rank1Element> elems) {
  std::vector<Mat2> mats;
  mats.reserve(elems.size());
  for (const Rank1Element& e : elems) {
    if (!(e.weight > 0.0)) throw invariant_error("rank-1 weight must be positive");
    mats.push_back(e.weight * (e.state.amp * e.state.amp.adjoint()));
  }
  check_povm(mats);
  return Povm{std::move(mats), std::move(elems)};
}

Povm computational_projectors() {
  return make_rank1_povm({{1.0, make_pure_state(1.0, 0.0)},
                          {1.0, make_pure_state(0.0, 1.0)}});
}

Povm hadamard_projectors() {
  const double s = std::sqrt(0.5);
  return make_rank1_povm({{1.0, make_pure_state(s, s)},
                          {1.0, make_pure_state(s, -s)}});
}

bool Ensemble::all_pure() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const EnsembleEntry& e) { return e.pure; });
}

double fidelity(const DensityOperator& a, const DensityOperator& b) {
  const Mat2 ra = matrix_sqrt_psd(a.m);
  const Mat2 inner = matrix_sqrt_psd(ra * b.m * ra);
  const double t = inner.trace().real();
  return t * t;
}

Ensemble finalize_ensemble(std::vector<EnsembleEntry> entries) {
  std::vector<EnsembleEntry> kept;
  double total = 0.0;
  for (EnsembleEntry& e : entries) {
    total += e.p;
    if (e.p <= kDropP) continue;
    bool merged = false;
    for (EnsembleEntry& k : kept) {
      if (fidelity(k.rho, e.rho) > kMergeFidelity) {
        k.p += e.p;
        merged = true;
        break;
      }
    }
    if (!merged) kept.push_back(std::move(e));
  }
  if (std::abs(total - 1.0) > 1e-10)
    throw invariant_error("ensemble probabilities do not sum to 1");
  if (kept.empty()) throw invariant_error("ensemble has no entries");
  return Ensemble{std::move(kept)};
}

double entanglement(SchmidtState state) {
  const double c = std::cos(state.alpha);
  return binary_entropy(c * c);
}

SchmidtState alpha_for_entanglement(double e) {
  if (e < 0.0 || e > 1.0)
    throw std::domain_error("entanglement outside [0,1]");
  if (e == 0.0) return SchmidtState{0.0};
  if (e == 1.0) return SchmidtState{M_PI / 4};
  double lo = 0.0, hi = M_PI / 4;
  for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (entanglement(SchmidtState{mid}) < e)
      lo = mid;
    else
      hi = mid;
  }
  return SchmidtState{0.5 * (lo + hi)};
}

Ensemble dual_map(SchmidtState state, const Povm& povm) {
  check_povm(povm.elements);
  const Mat2 sig = reduced_state(state);
  const Mat2 root = sqrt_sigma(state);
  std::vector<EnsembleEntry> entries;
  entries.reserve(povm.size());
  for (const Mat2& m : povm.elements) {
    EnsembleEntry e;
    e.p = (sig * m).trace().real();
    if (e.p <= kDropP) {
      e.p = std::max(e.p, 0.0);
      entries.push_back(e);  // dropped by finalize, still counted in the sum
      continue;
    }
    Mat2 rho = root * m.transpose() * root / e.p;
    rho = 0.5 * (rho + rho.adjoint().eval());
    e.rho = DensityOperator{rho};
    if ((rho * rho).trace().real() >= 1.0 - 1e-12) {
      e.pure = true;
      e.psi = PureState{eigen2(rho).vec[0]};
      e.rho = projector(e.psi);  // keep the stored operator exactly rank one
    }
    entries.push_back(std::move(e));
  }
  return finalize_ensemble(std::move(entries));
}

double measurement_entropy(const Povm& povm, const DensityOperator& rho) {
  double h = 0.0;
  for (const Mat2& m : povm.elements) {
    const double q = (m * rho.m).trace().real();
    if (q > 0.0) h -= q * std::log2(q);
  }
  return h;
}

namespace {

// Pure-state decompositions of a rank-2 state correspond to K x 2 matrices
// with orthonormal columns; rows give unnormalized members sqrt(lam_j) u_kj v_j.
struct DecompProblem {
  const Povm* povm;
  double lam[2];
  Vec2 vbasis[2];

  double average_entropy(const Eigen::MatrixXcd& u) const {
    double acc = 0.0;
    for (Eigen::Index k = 0; k < u.rows(); ++k) {
      const Vec2 raw = u(k, 0) * std::sqrt(lam[0]) * vbasis[0] +
                       u(k, 1) * std::sqrt(lam[1]) * vbasis[1];
      const double q = raw.squaredNorm();
      if (q <= kDropP) continue;
      const PureState phi{raw / std::sqrt(q)};
      acc += q * measurement_entropy(*povm, projector(phi));
    }
    return acc;
  }
};

Eigen::MatrixXcd chart_k2(double t, double phi) {
  Eigen::MatrixXcd u(2, 2);
  const Amp e = std::polar(1.0, phi);
  u << std::cos(t), -std::sin(t) * e, std::sin(t) * std::conj(e), std::cos(t);
  return u;
}

Eigen::MatrixXcd givens3(int i, int j, double t, double phi) {
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Identity(3, 3);
  const Amp e = std::polar(1.0, phi);
  g(i, i) = std::cos(t);
  g(j, j) = std::cos(t);
  g(i, j) = -std::sin(t) * e;
  g(j, i) = std::sin(t) * std::conj(e);
  return g;
}

Eigen::MatrixXcd chart_k3(const std::array<double, 6>& a) {
  const Eigen::MatrixXcd u3 = givens3(0, 1, a[0], a[3]) *
                              givens3(1, 2, a[1], a[4]) *
                              givens3(0, 1, a[2], a[5]);
  return u3.leftCols(2);
}

}  // namespace

double povm_uncertainty(const Povm& povm, SchmidtState state,
                        const DecompOpts& opts) {
  const Mat2 sig = reduced_state(state);
  const Eigen2 ed = eigen2(sig);
  if (ed.val[1] <= 1e-12) {
    // effectively pure: the decomposition is unique
    return measurement_entropy(povm, projector(PureState{ed.vec[0]}));
  }
  DecompProblem prob{&povm, {ed.val[0], ed.val[1]}, {ed.vec[0], ed.vec[1]}};

  double best = prob.average_entropy(Eigen::MatrixXcd::Identity(2, 2));

  const int k2_starts = opts.starts / 2;
  const int k3_starts = opts.starts - k2_starts;
  Rng rng(mix_seed(opts.seed));

  // two-element decompositions: chart (t, phi)
  {
    auto refine = [&](double t0, double p0) {
      double t = t0, p = p0;
      for (int round = 0; round < 3; ++round) {
        t = golden_min([&](double x) { return prob.average_entropy(chart_k2(x, p)); },
                       std::max(0.0, t - 0.25), std::min(M_PI / 2, t + 0.25),
                       opts.tol)
                .x;
        p = golden_min([&](double x) { return prob.average_entropy(chart_k2(t, x)); },
                       p - 0.8, p + 0.8, opts.tol)
                .x;
      }
      best = std::min(best, prob.average_entropy(chart_k2(t, p)));
    };
    int used = 0;
    for (int i = 0; i < 4 && used < k2_starts; ++i)
      for (int j = 0; j < 4 && used < k2_starts; ++j, ++used)
        refine(i * M_PI / 8, j * M_PI / 2);
    for (; used < k2_starts; ++used)
      refine(rng.uniform(0.0, M_PI / 2), rng.uniform(0.0, 2 * M_PI));
  }

  // three-element decompositions: six Givens angles
  {
    auto refine = [&](std::array<double, 6> a) {
      for (int round = 0; round < 3; ++round) {
        for (int c = 0; c < 6; ++c) {
          const double span = c < 3 ? 0.3 : 0.8;
          a[c] = golden_min(
                     [&](double x) {
                       std::array<double, 6> b = a;
                       b[c] = x;
                       return prob.average_entropy(chart_k3(b));
                     },
                     a[c] - span, a[c] + span, opts.tol)
                     .x;
        }
      }
      best = std::min(best, prob.average_entropy(chart_k3(a)));
    };
    int used = 0;
    for (int i = 0; i < 8 && used < k3_starts; ++i, ++used)
      refine({i * M_PI / 8, (i % 4) * M_PI / 6, (i % 2) * M_PI / 4, 0.0, 0.0, 0.0});
    for (; used < k3_starts; ++used)
      refine({rng.uniform(0.0, M_PI / 2), rng.uniform(0.0, M_PI / 2),
              rng.uniform(0.0, M_PI / 2), rng.uniform(0.0, 2 * M_PI),
              rng.uniform(0.0, 2 * M_PI), rng.uniform(0.0, 2 * M_PI)});
  }

  return best;
}

}  // namespace entcoh
