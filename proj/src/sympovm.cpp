#include "entcoh/sympovm.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "entcoh/infotheory.hpp"
#include "entcoh/optimize.hpp"

namespace entcoh {

namespace {

void check_spec(const SymPovmSpec& spec) {
  if (spec.n < 2) throw std::domain_error("sym povm: need n >= 2");
  if (!std::isfinite(spec.gamma)) throw std::domain_error("sym povm: bad gamma");
}

double direction(const SymPovmSpec& spec, int i) {
  return spec.gamma + 2.0 * M_PI * i / spec.n;
}

}  // namespace

Povm build_sym_povm(const SymPovmSpec& spec) {
  check_spec(spec);
  if (spec.gamma < -1e-12 || spec.gamma > M_PI / spec.n + 1e-12)
    throw std::domain_error("sym povm: gamma outside [0, pi/n]");
  std::vector<Rank1Element> elems;
  elems.reserve(static_cast<size_t>(spec.n));
  const double w = 2.0 / spec.n;
  for (int i = 0; i < spec.n; ++i) {
    const double half = 0.5 * direction(spec, i);
    elems.push_back({w, make_pure_state(std::cos(half), std::sin(half))});
  }
  return make_rank1_povm(std::move(elems));
}

std::vector<double> sym_probabilities(const SymPovmSpec& spec, SchmidtState state) {
  check_spec(spec);
  const double c2 = std::cos(state.alpha) * std::cos(state.alpha);
  const double s2 = 1.0 - c2;
  std::vector<double> p(static_cast<size_t>(spec.n));
  for (int i = 0; i < spec.n; ++i) {
    const double half = 0.5 * direction(spec, i);
    const double ch = std::cos(half), sh = std::sin(half);
    p[static_cast<size_t>(i)] = (2.0 / spec.n) * (ch * ch * c2 + sh * sh * s2);
  }
  return p;
}

Ensemble sym_ensemble(const SymPovmSpec& spec, SchmidtState state) {
  check_spec(spec);
  const double ca = std::cos(state.alpha), sa = std::sin(state.alpha);
  std::vector<EnsembleEntry> entries;
  entries.reserve(static_cast<size_t>(spec.n));
  for (int i = 0; i < spec.n; ++i) {
    const double half = 0.5 * direction(spec, i);
    const double a0 = ca * std::cos(half), a1 = sa * std::sin(half);
    EnsembleEntry e;
    e.p = (2.0 / spec.n) * (a0 * a0 + a1 * a1);
    if (e.p <= 1e-12) {
      e.p = std::max(e.p, 0.0);
      entries.push_back(e);
      continue;
    }
    const double norm = std::sqrt(a0 * a0 + a1 * a1);
    e.pure = true;
    e.psi = make_pure_state(a0 / norm, a1 / norm);
    e.rho = projector(e.psi);
    entries.push_back(std::move(e));
  }
  return finalize_ensemble(std::move(entries));
}

SymOptimum max_min_coherence(int n, SchmidtState state, const SymOpts& opts) {
  check_spec({n, 0.0});
  if (!(opts.gamma_tol > 0.0) || !(opts.basis_tol > 0.0))
    throw std::domain_error("sym search: tolerances must be positive");
  const BasisOpts inner{opts.basis_tol};
  const auto objective = [&](double gamma) {
    return -basis_free_coherence(sym_ensemble({n, gamma}, state), true, inner).value;
  };
  const double period = M_PI / n;
  const int m = grid_points_for_tol(period, opts.gamma_tol, 256);
  MinResult g = grid_min_endpoint(objective, 0.0, period, m, 1e-12, true);
  g = refine_min(objective, 0.0, period, g, period / (m - 1), opts.gamma_tol, 1e-12);

  SymOptimum out;
  out.gamma = g.x;
  out.evals = g.evals;
  const CoherenceResult at =
      basis_free_coherence(sym_ensemble({n, g.x}, state), true, inner);
  out.coherence = at.value;
  out.basis = at.optimal_basis;
  if (n % 2 == 0 && std::abs(out.gamma - period) > 1e-3)
    std::fprintf(stderr,
                 "warning: offset search for even n = %d settled at %.6f, "
                 "expected pi/n = %.6f\n",
                 n, out.gamma, period);
  return out;
}

AsymptoticSplit asymptotic_split(SchmidtState state, int n_large,
                                 const SymOpts& opts) {
  if (n_large < 64)
    throw std::domain_error("asymptotic split: need n_large >= 64");
  const SymOptimum opt = max_min_coherence(n_large, state, opts);
  const Ensemble ens = sym_ensemble({n_large, opt.gamma}, state);
  AsymptoticSplit out;
  out.coherence = opt.coherence;
  out.i_acc = accessible_information(ens).value;
  out.residual = std::abs(entanglement(state) - out.coherence - out.i_acc);
  return out;
}

}  // namespace entcoh
