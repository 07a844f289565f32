#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "entcoh/infotheory.hpp"
#include "entcoh/sympovm.hpp"

namespace entcoh {

// One row of a sweep: angles in radians, entropic quantities in bits.
struct SweepRecord {
  double alpha = 0.0;
  double entanglement = 0.0;
  int n = 0;
  double coherence = 0.0;
  double optimal_gamma = 0.0;
  double optimal_theta = 0.0;
  double holevo = 0.0;
  double accessible_info = 0.0;
  double lower_bound = 0.0;
};

struct SweepOpts {
  int e_grid = 201;
  std::uint64_t seed = 12345;
  int threads = 1;
  SymOpts sym;
};

// Uniform grid over [0, 1] inclusive.
std::vector<double> entanglement_grid(int points);

// Two-outcome measurement fixed at the unbiased basis; closed-form readout.
SweepRecord b92_record(double e, const SweepOpts& opts, std::uint64_t row_seed);

// Offset-optimized symmetric measurement with n outcomes.
SweepRecord sym_record(int n, double e, const SweepOpts& opts,
                       std::uint64_t row_seed);

std::vector<SweepRecord> b92_sweep(const SweepOpts& opts);
std::vector<SweepRecord> sym_sweep(int n, const SweepOpts& opts);
std::vector<SweepRecord> sym_sweep_over(int n, const std::vector<double>& e_values,
                                        const SweepOpts& opts);

inline bool sandwich_ok(const SweepRecord& r, double slack = 1e-6) {
  return r.lower_bound <= r.coherence + slack && r.coherence <= r.holevo + slack;
}

struct SweepMeta {
  std::string experiment;
  std::uint64_t seed = 12345;
  int grid = 0;
};

void write_csv(std::ostream& os, const SweepMeta& meta,
               const std::vector<SweepRecord>& rows);
void write_json(std::ostream& os, const SweepMeta& meta,
                const std::vector<SweepRecord>& rows);

}  // namespace entcoh
