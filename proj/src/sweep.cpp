#include "entcoh/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "entcoh/optimize.hpp"

namespace entcoh {

namespace {

constexpr const char* kHeader =
    "alpha,entanglement,n,coherence,optimal_gamma,optimal_theta,holevo,"
    "accessible_info,lower_bound";

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

void fill_info(SweepRecord* r, const Ensemble& ens, std::uint64_t row_seed) {
  r->holevo = holevo(ens);
  InfoOpts io;
  io.seed = row_seed;
  r->accessible_info = accessible_information(ens, io).value;
  r->lower_bound = coherence_lower_bound(r->holevo, r->accessible_info);
}

template <class Fn>
std::vector<SweepRecord> run_rows(const std::vector<double>& grid, int threads,
                                  std::uint64_t seed, Fn&& make_row) {
  std::vector<SweepRecord> rows(grid.size());
  const int nt = std::max(1, threads);
  if (nt == 1 || grid.size() < 2) {
    for (size_t i = 0; i < grid.size(); ++i)
      rows[i] = make_row(grid[i], mix_seed(seed ^ i));
    return rows;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(nt));
  for (int t = 0; t < nt; ++t) {
    pool.emplace_back([&, t] {
      for (size_t i = static_cast<size_t>(t); i < grid.size();
           i += static_cast<size_t>(nt))
        rows[i] = make_row(grid[i], mix_seed(seed ^ i));
    });
  }
  for (std::thread& th : pool) th.join();
  return rows;
}

}  // namespace

std::vector<double> entanglement_grid(int points) {
  if (points < 2) throw std::domain_error("sweep: need at least 2 grid points");
  std::vector<double> e(static_cast<size_t>(points));
  for (int i = 0; i < points; ++i)
    e[static_cast<size_t>(i)] = static_cast<double>(i) / (points - 1);
  return e;
}

SweepRecord b92_record(double e, const SweepOpts& opts, std::uint64_t row_seed) {
  SweepRecord r;
  r.entanglement = e;
  r.alpha = alpha_for_entanglement(e).alpha;
  r.n = 2;
  r.optimal_gamma = M_PI / 2;
  const Ensemble ens = sym_ensemble({2, M_PI / 2}, SchmidtState{r.alpha});
  const CoherenceResult c =
      basis_free_coherence(ens, true, BasisOpts{opts.sym.basis_tol});
  r.coherence = c.value;
  r.optimal_theta = c.optimal_basis.theta;
  fill_info(&r, ens, row_seed);
  return r;
}

SweepRecord sym_record(int n, double e, const SweepOpts& opts,
                       std::uint64_t row_seed) {
  SweepRecord r;
  r.entanglement = e;
  r.alpha = alpha_for_entanglement(e).alpha;
  r.n = n;
  const SchmidtState st{r.alpha};
  const SymOptimum opt = max_min_coherence(n, st, opts.sym);
  r.coherence = opt.coherence;
  r.optimal_gamma = opt.gamma;
  r.optimal_theta = opt.basis.theta;
  fill_info(&r, sym_ensemble({n, opt.gamma}, st), row_seed);
  return r;
}

std::vector<SweepRecord> b92_sweep(const SweepOpts& opts) {
  return run_rows(entanglement_grid(opts.e_grid), opts.threads, opts.seed,
                  [&](double e, std::uint64_t rs) { return b92_record(e, opts, rs); });
}

std::vector<SweepRecord> sym_sweep(int n, const SweepOpts& opts) {
  return sym_sweep_over(n, entanglement_grid(opts.e_grid), opts);
}

std::vector<SweepRecord> sym_sweep_over(int n, const std::vector<double>& e_values,
                                        const SweepOpts& opts) {
  if (n < 2) throw std::domain_error("sweep: need n >= 2");
  return run_rows(e_values, opts.threads, opts.seed,
                  [&](double e, std::uint64_t rs) { return sym_record(n, e, opts, rs); });
}

void write_csv(std::ostream& os, const SweepMeta& meta,
               const std::vector<SweepRecord>& rows) {
  os << "# experiment=" << meta.experiment << "\n";
  os << "# seed=" << meta.seed << "\n";
  os << "# grid=" << meta.grid << "\n";
  os << kHeader << "\n";
  for (const SweepRecord& r : rows) {
    os << fmt(r.alpha) << ',' << fmt(r.entanglement) << ',' << r.n << ','
       << fmt(r.coherence) << ',' << fmt(r.optimal_gamma) << ','
       << fmt(r.optimal_theta) << ',' << fmt(r.holevo) << ','
       << fmt(r.accessible_info) << ',' << fmt(r.lower_bound) << '\n';
  }
}

void write_json(std::ostream& os, const SweepMeta& meta,
                const std::vector<SweepRecord>& rows) {
  nlohmann::ordered_json doc;
  doc["meta"] = {{"experiment", meta.experiment},
                 {"seed", meta.seed},
                 {"grid", meta.grid}};
  doc["rows"] = nlohmann::ordered_json::array();
  for (const SweepRecord& r : rows) {
    doc["rows"].push_back({{"alpha", r.alpha},
                           {"entanglement", r.entanglement},
                           {"n", r.n},
                           {"coherence", r.coherence},
                           {"optimal_gamma", r.optimal_gamma},
                           {"optimal_theta", r.optimal_theta},
                           {"holevo", r.holevo},
                           {"accessible_info", r.accessible_info},
                           {"lower_bound", r.lower_bound}});
  }
  os << doc.dump(2) << "\n";
}

}  // namespace entcoh
