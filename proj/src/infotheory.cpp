#include "entcoh/infotheory.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "entcoh/optimize.hpp"

namespace entcoh {

namespace {

constexpr double kInvLn2 = 1.4426950408889634;

double mi_from_joint(const Eigen::ArrayXXd& joint) {
  const Eigen::ArrayXd rows = joint.rowwise().sum().max(1e-300);
  const Eigen::ArrayXd cols = joint.colwise().sum().transpose().max(1e-300);
  const Eigen::ArrayXXd denom = rows.matrix() * cols.matrix().transpose();
  const double nats = (joint * (joint.max(1e-300) / denom).log()).sum();
  return std::max(0.0, nats * kInvLn2);
}

// Outcome probabilities of a real rank-one direction (c, s) against every
// ensemble member reduce to a quadratic form in the real part of rho.
struct RealView {
  Eigen::ArrayXd p, a00, a01, a11;
  std::vector<Mat2> rho;
  bool all_real = true;

  explicit RealView(const Ensemble& ens) {
    const Eigen::Index n = static_cast<Eigen::Index>(ens.size());
    p.resize(n);
    a00.resize(n);
    a01.resize(n);
    a11.resize(n);
    rho.reserve(ens.size());
    for (Eigen::Index i = 0; i < n; ++i) {
      const EnsembleEntry& e = ens.entries[static_cast<size_t>(i)];
      p(i) = e.p;
      a00(i) = e.rho.m(0, 0).real();
      a11(i) = e.rho.m(1, 1).real();
      a01(i) = 0.5 * (e.rho.m(0, 1).real() + e.rho.m(1, 0).real());
      rho.push_back(e.rho.m);
      if (e.rho.m.imag().cwiseAbs().maxCoeff() > 1e-9) all_real = false;
    }
  }

  Eigen::ArrayXd born(double c, double s) const {
    return (c * c) * a00 + (2.0 * c * s) * a01 + (s * s) * a11;
  }
};

double mi_projective_real(const RealView& v, double theta) {
  const Eigen::ArrayXd q =
      v.born(std::cos(0.5 * theta), std::sin(0.5 * theta)).min(1.0).max(0.0);
  Eigen::ArrayXXd joint(v.p.size(), 2);
  joint.col(0) = v.p * q;
  joint.col(1) = v.p * (1.0 - q);
  return mi_from_joint(joint);
}

double mi_projective(const RealView& v, const MeasurementBasis& basis) {
  const Vec2 e1 = basis.e1();
  Eigen::ArrayXXd joint(v.p.size(), 2);
  for (Eigen::Index i = 0; i < v.p.size(); ++i) {
    const double q =
        std::clamp(e1.dot(v.rho[static_cast<size_t>(i)] * e1).real(), 0.0, 1.0);
    joint(i, 0) = v.p(i) * q;
    joint(i, 1) = v.p(i) * (1.0 - q);
  }
  return mi_from_joint(joint);
}

// Weights making three real rank-one directions a resolution of the identity.
bool trine_weights(const std::array<double, 3>& u, Eigen::Vector3d* w) {
  Eigen::Matrix3d a;
  for (int j = 0; j < 3; ++j) {
    a(0, j) = 1.0;
    a(1, j) = std::cos(2.0 * u[static_cast<size_t>(j)]);
    a(2, j) = std::sin(2.0 * u[static_cast<size_t>(j)]);
  }
  const Eigen::Vector3d b(2.0, 0.0, 0.0);
  const Eigen::FullPivLU<Eigen::Matrix3d> lu(a);
  if (!lu.isInvertible()) return false;
  *w = lu.solve(b);
  return w->minCoeff() >= 0.0 && (a * *w - b).cwiseAbs().maxCoeff() <= 1e-9;
}

double mi_three_outcome(const RealView& v, const std::array<double, 3>& u) {
  Eigen::Vector3d w;
  if (!trine_weights(u, &w)) return -1.0;
  Eigen::ArrayXXd joint(v.p.size(), 3);
  for (int j = 0; j < 3; ++j) {
    const double uj = u[static_cast<size_t>(j)];
    joint.col(j) =
        v.p * w(j) * v.born(std::cos(uj), std::sin(uj)).max(0.0);
  }
  return mi_from_joint(joint);
}

// Real ray orthogonal to a pure state, if the state is real up to phase.
bool anti_angle(const PureState& psi, double* out) {
  const Amp a0 = psi.amp(0), a1 = psi.amp(1);
  const Amp ref = std::norm(a0) >= std::norm(a1) ? a0 : a1;
  const Amp ph = std::conj(ref) / std::abs(ref);
  const Amp b0 = ph * a0, b1 = ph * a1;
  if (std::abs(b0.imag()) > 1e-9 || std::abs(b1.imag()) > 1e-9) return false;
  double u = std::atan2(b1.real(), b0.real()) + M_PI / 2;
  u = std::fmod(u, M_PI);
  if (u < 0.0) u += M_PI;
  *out = u;
  return true;
}

struct TripleResult {
  std::array<double, 3> u{};
  double mi = -1.0;
};

TripleResult refine_triple(const RealView& v, std::array<double, 3> u, double tol) {
  TripleResult best;
  best.u = u;
  best.mi = mi_three_outcome(v, u);
  for (int round = 0; round < 4; ++round) {
    for (int c = 0; c < 3; ++c) {
      std::array<double, 3> trial = best.u;
      const auto f = [&](double x) {
        trial[static_cast<size_t>(c)] = x;
        return -mi_three_outcome(v, trial);
      };
      const double center = best.u[static_cast<size_t>(c)];
      const MinResult r = golden_min(f, center - 0.45, center + 0.45, tol);
      if (-r.fx > best.mi) {
        best.mi = -r.fx;
        best.u[static_cast<size_t>(c)] = r.x;
      }
    }
  }
  return best;
}

AccessibleInfoResult optimize_accessible(const Ensemble& ens, const InfoOpts& opts) {
  const RealView view(ens);

  // Two-outcome projective search.
  double best2_theta = 0.0, best2_phi = 0.0;
  double best2 = -1.0;
  if (view.all_real) {
    const auto f = [&](double th) { return -mi_projective_real(view, th); };
    MinResult g = grid_min_midpoint(f, 0.0, M_PI, 512, 1e-12);
    g = refine_min(f, 0.0, M_PI, g, M_PI / 512, opts.tol, 0.0);
    best2_theta = g.x;
    best2 = -g.fx;
  } else {
    const int mt = 128, mp = 64;
    double vmin = 1e300;
    for (int i = 0; i < mt; ++i) {
      const double th = (i + 0.5) * M_PI / mt;
      for (int j = 0; j < mp; ++j) {
        const double ph = (j + 0.5) * 2.0 * M_PI / mp;
        const double val = -mi_projective(view, MeasurementBasis{th, ph});
        if (val < vmin) {
          vmin = val;
          best2_theta = th;
          best2_phi = ph;
        }
      }
    }
    for (int round = 0; round < 3; ++round) {
      const auto ft = [&](double th) {
        return -mi_projective(view, MeasurementBasis{th, best2_phi});
      };
      const MinResult rt = golden_min(ft, std::max(0.0, best2_theta - M_PI / mt),
                                      std::min(M_PI, best2_theta + M_PI / mt), opts.tol);
      if (rt.fx < vmin) {
        vmin = rt.fx;
        best2_theta = rt.x;
      }
      const auto fp = [&](double ph) {
        return -mi_projective(view, MeasurementBasis{best2_theta, ph});
      };
      const MinResult rp = golden_min(fp, best2_phi - 2.0 * M_PI / mp,
                                      best2_phi + 2.0 * M_PI / mp, opts.tol);
      if (rp.fx < vmin) {
        vmin = rp.fx;
        best2_phi = rp.x;
      }
    }
    best2 = -vmin;
  }

  // Three-outcome search over real directions, seeded from rays orthogonal
  // to the ensemble states plus symmetric triples; random restarts fill up
  // the budget.
  std::vector<std::array<double, 3>> seeds;
  std::vector<double> antis;
  for (const EnsembleEntry& e : ens.entries) {
    double u;
    if (e.pure && anti_angle(e.psi, &u)) antis.push_back(u);
  }
  std::sort(antis.begin(), antis.end());
  if (antis.size() >= 3) {
    const size_t k = antis.size();
    seeds.push_back({antis[0], antis[k / 3], antis[2 * k / 3]});
    seeds.push_back({antis[0], antis[1], antis[2]});
  }
  for (size_t i = 0; i < antis.size() && i < 4; ++i)
    seeds.push_back({antis[i], antis[i] + M_PI / 3, antis[i] + 2 * M_PI / 3});
  seeds.push_back({0.0, M_PI / 3, 2 * M_PI / 3});

  Rng rng(mix_seed(opts.seed ^ 0x1acc));
  while (seeds.size() < static_cast<size_t>(std::max(opts.starts, 1)))
    seeds.push_back({rng.uniform(0.0, M_PI), rng.uniform(0.0, M_PI),
                     rng.uniform(0.0, M_PI)});

  TripleResult best3;
  for (const auto& s : seeds) {
    const TripleResult r = refine_triple(view, s, opts.tol);
    if (r.mi > best3.mi) best3 = r;
  }

  AccessibleInfoResult out;
  out.method = InfoMethod::optimized;
  if (best3.mi > best2) {
    out.value = best3.mi;
    Eigen::Vector3d w;
    trine_weights(best3.u, &w);
    std::vector<Rank1Element> elems;
    for (int j = 0; j < 3; ++j) {
      const double u = best3.u[static_cast<size_t>(j)];
      elems.push_back({w(j), make_pure_state(std::cos(u), std::sin(u))});
    }
    out.optimal_povm = make_rank1_povm(std::move(elems));
  } else {
    out.value = best2;
    const MeasurementBasis basis{best2_theta, best2_phi};
    out.optimal_povm = make_rank1_povm(
        {{1.0, PureState{basis.e1()}}, {1.0, PureState{basis.e2()}}});
  }
  return out;
}

AccessibleInfoResult analytic_two_pure(const Ensemble& ens) {
  const double ov = std::min(1.0, std::abs(overlap(ens.entries[0].psi,
                                                   ens.entries[1].psi)));
  const double q = 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - ov * ov)));
  AccessibleInfoResult out;
  out.value = std::max(0.0, 1.0 - binary_entropy(q));
  out.method = InfoMethod::analytic_two_pure;
  const Mat2 diff = ens.entries[0].rho.m - ens.entries[1].rho.m;
  const Eigen2 eig = eigen2(diff);
  out.optimal_povm = make_rank1_povm(
      {{1.0, PureState{eig.vec[0]}}, {1.0, PureState{eig.vec[1]}}});
  return out;
}

}  // namespace

double holevo(const Ensemble& ens) {
  if (ens.entries.empty()) throw std::domain_error("holevo: empty ensemble");
  Mat2 avg = Mat2::Zero();
  double cond = 0.0;
  for (const EnsembleEntry& e : ens.entries) {
    avg += e.p * e.rho.m;
    if (!e.pure) cond += e.p * von_neumann_entropy(e.rho);
  }
  avg = 0.5 * (avg + avg.adjoint().eval());
  return std::max(0.0, von_neumann_entropy(DensityOperator{avg}) - cond);
}

double mutual_information(const Ensemble& ens, const Povm& povm) {
  if (ens.entries.empty() || povm.size() == 0)
    throw std::domain_error("mutual_information: empty ensemble or measurement");
  Eigen::ArrayXXd joint(static_cast<Eigen::Index>(ens.size()),
                        static_cast<Eigen::Index>(povm.size()));
  for (size_t i = 0; i < ens.size(); ++i)
    for (size_t j = 0; j < povm.size(); ++j)
      joint(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = std::max(
          0.0,
          ens.entries[i].p * (ens.entries[i].rho.m * povm.elements[j]).trace().real());
  return mi_from_joint(joint);
}

AccessibleInfoResult accessible_information(const Ensemble& ens, const InfoOpts& opts) {
  if (ens.entries.empty())
    throw std::domain_error("accessible_information: empty ensemble");
  if (ens.size() == 2 && ens.all_pure() &&
      std::abs(ens.entries[0].p - 0.5) <= 1e-12 &&
      std::abs(ens.entries[1].p - 0.5) <= 1e-12) {
    return analytic_two_pure(ens);
  }
  return optimize_accessible(ens, opts);
}

AccessibleInfoResult accessible_information_optimized(const Ensemble& ens,
                                                      const InfoOpts& opts) {
  if (ens.entries.empty())
    throw std::domain_error("accessible_information: empty ensemble");
  return optimize_accessible(ens, opts);
}

UsdResult usd_povm(const PureState& a, const PureState& b) {
  UsdResult out;
  const double s = std::min(1.0, std::abs(overlap(a, b)));
  if (s >= 1.0 - 1e-12) {
    out.degenerate = true;
    out.p_conclusive = 0.0;
    out.povm = make_povm({Mat2::Identity()});
    return out;
  }
  const auto orth = [](const PureState& x) {
    Vec2 v;
    v << -std::conj(x.amp(1)), std::conj(x.amp(0));
    return v;
  };
  const double q = 1.0 / (1.0 + s);
  const Vec2 da = orth(b), db = orth(a);  // da never fires on b, db never on a
  const Mat2 e1 = q * (da * da.adjoint());
  const Mat2 e2 = q * (db * db.adjoint());
  Mat2 rest = Mat2::Identity() - e1 - e2;
  rest = 0.5 * (rest + rest.adjoint().eval());
  std::vector<Mat2> elems{e1, e2};
  if (rest.trace().real() > 1e-12) elems.push_back(rest);
  out.povm = make_povm(elems);
  out.p_conclusive = 1.0 - s;
  return out;
}

}  // namespace entcoh
