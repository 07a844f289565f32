#include "entcoh/coherence.hpp"

#include <cmath>

#include "entcoh/optimize.hpp"

namespace entcoh {

namespace {

constexpr double kInvLn2 = 1.4426950408889634;
constexpr double kTieEps = 1e-12;

Eigen::ArrayXd h2_array(const Eigen::ArrayXd& x) {
  // vectorized binary entropy; the 1e-300 floor keeps 0*log(0) at zero
  const Eigen::ArrayXd xc = x.min(1.0).max(0.0);
  const Eigen::ArrayXd a = xc.max(1e-300);
  const Eigen::ArrayXd b = (1.0 - xc).max(1e-300);
  return -(a * a.log() + b * b.log()) * kInvLn2;
}

// Per-ensemble arrays so the basis scan runs on vector arithmetic.
struct Cache {
  bool all_pure = true;
  bool real_amps = true;
  Eigen::ArrayXd p;
  Eigen::ArrayXd ra0, ra1;    // pure, real chart
  Eigen::ArrayXcd ca0, ca1;   // pure, complex
  const Ensemble* ens = nullptr;
  std::vector<double> s_rho;  // entropies of mixed entries

  explicit Cache(const Ensemble& e) : ens(&e) {
    const auto n = static_cast<Eigen::Index>(e.size());
    p.resize(n);
    ra0.resize(n);
    ra1.resize(n);
    ca0.resize(n);
    ca1.resize(n);
    s_rho.assign(e.size(), 0.0);
    for (Eigen::Index i = 0; i < n; ++i) {
      const EnsembleEntry& ent = e.entries[static_cast<size_t>(i)];
      p(i) = ent.p;
      if (!ent.pure) {
        all_pure = false;
        s_rho[static_cast<size_t>(i)] = von_neumann_entropy(ent.rho);
        continue;
      }
      // fix the global phase so real ensembles land on the real chart
      Amp a0 = ent.psi.amp(0), a1 = ent.psi.amp(1);
      const Amp ref = std::abs(a0) >= std::abs(a1) ? a0 : a1;
      if (std::abs(ref) > 0.0) {
        const Amp ph = std::conj(ref) / std::abs(ref);
        a0 *= ph;
        a1 *= ph;
      }
      ca0(i) = a0;
      ca1(i) = a1;
      ra0(i) = a0.real();
      ra1(i) = a1.real();
      if (std::abs(a0.imag()) > 1e-9 || std::abs(a1.imag()) > 1e-9)
        real_amps = false;
    }
  }

  double at_real(double theta) const {
    const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
    const Eigen::ArrayXd ov = (c * ra0 + s * ra1).square();
    return (p * h2_array(ov)).sum();
  }

  double at(double theta, double phi) const {
    if (all_pure) {
      if (real_amps && phi == 0.0) return at_real(theta);
      const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
      const Amp w = std::polar(s, -phi);
      const Eigen::ArrayXd ov = (c * ca0 + w * ca1).abs2();
      return (p * h2_array(ov)).sum();
    }
    const MeasurementBasis basis{theta, phi};
    double acc = 0.0;
    for (size_t i = 0; i < ens->size(); ++i) {
      const EnsembleEntry& ent = ens->entries[i];
      if (ent.pure) {
        acc += ent.p * binary_entropy(std::norm(basis.e1().dot(ent.psi.amp)));
      } else {
        const double q = (basis.e1().adjoint() * ent.rho.m * basis.e1()).value().real();
        acc += ent.p * std::max(0.0, binary_entropy(std::min(std::max(q, 0.0), 1.0)) -
                                         s_rho[i]);
      }
    }
    return acc;
  }
};

}  // namespace

double relative_entropy_coherence(const DensityOperator& rho,
                                  const MeasurementBasis& basis) {
  const double q =
      (basis.e1().adjoint() * rho.m * basis.e1()).value().real();
  const double s_diag = binary_entropy(std::min(std::max(q, 0.0), 1.0));
  return std::max(0.0, s_diag - von_neumann_entropy(rho));
}

double ensemble_coherence_in_basis(const Ensemble& ens,
                                   const MeasurementBasis& basis) {
  if (ens.all_pure()) {
    double acc = 0.0;
    for (const EnsembleEntry& e : ens.entries)
      acc += e.p * binary_entropy(std::norm(basis.e1().dot(e.psi.amp)));
    return acc;
  }
  double acc = 0.0;
  for (const EnsembleEntry& e : ens.entries)
    acc += e.p * relative_entropy_coherence(e.rho, basis);
  return acc;
}

CoherenceResult basis_free_coherence(const Ensemble& ens, bool real_plane,
                                     const BasisOpts& opts) {
  const Cache cache(ens);

  if (real_plane) {
    auto f = [&](double th) { return cache.at_real(th); };
    const int m = grid_points_for_tol(M_PI, opts.tol, 1024);
    const MinResult g = grid_min_midpoint(f, 0.0, M_PI, m, kTieEps);
    const MinResult r = refine_min(f, 0.0, M_PI, g, M_PI / m, opts.tol);
    return CoherenceResult{r.fx, MeasurementBasis{r.x, 0.0}, r.evals};
  }

  const int mt = grid_points_for_tol(M_PI, opts.tol, 256);
  const int mp = grid_points_for_tol(2.0 * M_PI, opts.tol, 128);
  const double ct = M_PI / mt, cp = 2.0 * M_PI / mp;
  Eigen::ArrayXXd vals(mt, mp);
  for (int i = 0; i < mt; ++i)
    for (int j = 0; j < mp; ++j)
      vals(i, j) = cache.at((i + 0.5) * ct, (j + 0.5) * cp);
  const double vmin = vals.minCoeff();
  int bi = 0, bj = 0;
  [&] {
    for (int i = 0; i < mt; ++i)
      for (int j = 0; j < mp; ++j)
        if (vals(i, j) <= vmin + kTieEps) {
          bi = i;
          bj = j;
          return;
        }
  }();

  double th = (bi + 0.5) * ct, ph = (bj + 0.5) * cp;
  double fv = vals(bi, bj);
  int evals = mt * mp;
  for (int round = 0; round < 3; ++round) {
    const MinResult rt =
        golden_min([&](double x) { return cache.at(x, ph); },
                   std::max(0.0, th - ct), std::min(M_PI, th + ct), opts.tol);
    if (rt.fx < fv) {
      th = rt.x;
      fv = rt.fx;
    }
    const MinResult rp = golden_min([&](double x) { return cache.at(th, x); },
                                    ph - cp, ph + cp, opts.tol);
    if (rp.fx < fv) {
      ph = rp.x;
      fv = rp.fx;
    }
    evals += rt.evals + rp.evals;
  }
  if (ph < 0.0) ph += 2.0 * M_PI;
  if (ph >= 2.0 * M_PI) ph -= 2.0 * M_PI;
  return CoherenceResult{fv, MeasurementBasis{th, ph}, evals};
}

Ensemble perturb_ensemble(const Ensemble& ens, const DensityOperator& rho,
                          double delta) {
  if (delta < 0.0 || delta > 1.0)
    throw std::domain_error("perturbation weight outside [0,1]");
  std::vector<EnsembleEntry> entries;
  entries.reserve(ens.size() + 1);
  EnsembleEntry head;
  head.p = delta;
  head.rho = rho;
  if (purity(rho) >= 1.0 - 1e-12) {
    head.pure = true;
    head.psi = PureState{eigen2(rho.m).vec[0]};
  }
  entries.push_back(std::move(head));
  for (const EnsembleEntry& e : ens.entries) {
    EnsembleEntry scaled = e;
    scaled.p *= 1.0 - delta;
    entries.push_back(std::move(scaled));
  }
  return finalize_ensemble(std::move(entries));
}

}  // namespace entcoh
