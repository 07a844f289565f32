#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "entcoh/sweep.hpp"
#include "entcoh/verify.hpp"

namespace {

// 0 ok, 1 failed claims or invariant violations, 2 bad configuration,
// 3 output I/O failure.
enum ExitCode { kOk = 0, kFailedChecks = 1, kBadConfig = 2, kIoError = 3 };

struct CliConfig {
  int e_grid = 201;
  std::string out;
  std::string format = "csv";
  std::uint64_t seed = 12345;
  int threads = 0;  // 0 = all hardware threads
  double basis_tol = 1e-10;
  double gamma_tol = 1e-10;
};

entcoh::SweepOpts sweep_opts(const CliConfig& cfg) {
  entcoh::SweepOpts sw;
  sw.e_grid = cfg.e_grid;
  sw.seed = cfg.seed;
  sw.threads = cfg.threads;
  sw.sym.basis_tol = cfg.basis_tol;
  sw.sym.gamma_tol = cfg.gamma_tol;
  return sw;
}

int check_config(const CliConfig& cfg) {
  if (cfg.e_grid < 2) {
    std::fprintf(stderr, "error: --e-grid must be at least 2\n");
    return kBadConfig;
  }
  if (!(cfg.basis_tol > 0.0) || !(cfg.gamma_tol > 0.0)) {
    std::fprintf(stderr, "error: tolerances must be positive\n");
    return kBadConfig;
  }
  if (cfg.threads < 0) {
    std::fprintf(stderr, "error: --threads must be positive\n");
    return kBadConfig;
  }
  return kOk;
}

int write_rows(const CliConfig& cfg, const entcoh::SweepMeta& meta,
               const std::vector<entcoh::SweepRecord>& rows) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!cfg.out.empty()) {
    file.open(cfg.out, std::ios::binary);
    if (!file) {
      std::fprintf(stderr, "error: cannot open %s for writing\n",
                   cfg.out.c_str());
      return kIoError;
    }
    os = &file;
  }
  if (cfg.format == "json")
    entcoh::write_json(*os, meta, rows);
  else
    entcoh::write_csv(*os, meta, rows);
  os->flush();
  if (!*os) {
    std::fprintf(stderr, "error: writing %s failed\n",
                 cfg.out.empty() ? "stdout" : cfg.out.c_str());
    return kIoError;
  }
  return kOk;
}

int run_sweep(const CliConfig& cfg, const std::string& experiment,
              const std::vector<entcoh::SweepRecord>& rows) {
  int violations = 0;
  for (const entcoh::SweepRecord& r : rows) {
    if (!entcoh::sandwich_ok(r)) {
      ++violations;
      std::fprintf(stderr,
                   "sandwich violation at E = %.6f, n = %d: "
                   "LB = %.9f, C = %.9f, chi = %.9f\n",
                   r.entanglement, r.n, r.lower_bound, r.coherence, r.holevo);
    }
  }
  entcoh::SweepMeta meta;
  meta.experiment = experiment;
  meta.seed = cfg.seed;
  meta.grid = cfg.e_grid;
  const int io = write_rows(cfg, meta, rows);
  if (io != kOk) return io;
  return violations == 0 ? kOk : kFailedChecks;
}

int run_verify(const CliConfig& cfg) {
  entcoh::VerifyOpts vo;
  vo.e_grid = cfg.e_grid;
  vo.seed = cfg.seed;
  vo.threads = cfg.threads;
  vo.sym.basis_tol = cfg.basis_tol;
  vo.sym.gamma_tol = cfg.gamma_tol;
  const std::vector<entcoh::ClaimResult> results = entcoh::run_verification(vo);

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!cfg.out.empty()) {
    file.open(cfg.out, std::ios::binary);
    if (!file) {
      std::fprintf(stderr, "error: cannot open %s for writing\n",
                   cfg.out.c_str());
      return kIoError;
    }
    os = &file;
  }

  bool all_pass = true;
  for (const entcoh::ClaimResult& r : results) {
    all_pass = all_pass && r.pass;
    char line[256];
    std::snprintf(line, sizeof(line), "[%s] %-24s measured %.3g (allow %.3g)",
                  r.pass ? " pass " : " FAIL ", r.id.c_str(), r.measured,
                  r.tolerance);
    *os << line << "  " << r.claim << "\n";
    if (!r.pass) *os << "         " << r.detail << "\n";
  }
  *os << (all_pass ? "verification passed" : "verification FAILED") << " ("
      << results.size() << " claims)\n";
  os->flush();
  if (!*os) return kIoError;
  return all_pass ? kOk : kFailedChecks;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ensemble coherence sweeps for partially entangled qubit pairs"};
  app.fallthrough();
  app.require_subcommand(1);

  CliConfig cfg;
  app.add_option("--e-grid", cfg.e_grid, "entanglement grid points");
  app.add_option("--out", cfg.out, "output file (default: stdout)");
  app.add_option("--format", cfg.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", cfg.seed, "base seed for stochastic searches");
  app.add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
  app.add_option("--basis-tol", cfg.basis_tol, "basis search tolerance");
  app.add_option("--gamma-tol", cfg.gamma_tol, "offset search tolerance");

  CLI::App* b92 = app.add_subcommand("b92", "two-state ensemble sweep");
  int sym_n = 0;
  CLI::App* sym =
      app.add_subcommand("sym", "symmetric n-outcome ensemble sweep");
  sym->add_option("--n", sym_n, "outcome count (>= 2)")->required();
  int asy_n = 256;
  CLI::App* asy = app.add_subcommand(
      "asymptotic", "large-n sweep splitting E into coherence + I_acc");
  asy->add_option("--n", asy_n, "outcome count (>= 64)");
  app.add_subcommand("verify", "recheck the headline claims from scratch");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kBadConfig;
  }

  if (const int rc = check_config(cfg); rc != kOk) return rc;
  if (cfg.threads == 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    cfg.threads = hw == 0 ? 1 : static_cast<int>(hw);
  }

  try {
    if (app.got_subcommand("verify")) return run_verify(cfg);
    const entcoh::SweepOpts sw = sweep_opts(cfg);
    if (app.got_subcommand(b92)) return run_sweep(cfg, "b92", entcoh::b92_sweep(sw));
    if (app.got_subcommand(sym)) {
      if (sym_n < 2) {
        std::fprintf(stderr, "error: sym needs --n of at least 2\n");
        return kBadConfig;
      }
      return run_sweep(cfg, "sym" + std::to_string(sym_n),
                       entcoh::sym_sweep(sym_n, sw));
    }
    if (app.got_subcommand(asy)) {
      if (asy_n < 64) {
        std::fprintf(stderr, "error: asymptotic needs --n of at least 64\n");
        return kBadConfig;
      }
      return run_sweep(cfg, "asymptotic" + std::to_string(asy_n),
                       entcoh::sym_sweep(asy_n, sw));
    }
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kBadConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kFailedChecks;
  }
  return kBadConfig;
}
