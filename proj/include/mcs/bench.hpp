#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcs/generators.hpp"

namespace mcs {

struct BenchRecord {
  std::string family;
  int n = 0;
  int k = 0;
  std::uint64_t seed = 0;
  int opt_size = 0;
  double dp_millis = 0.0;
  std::size_t states_max = 0;
  std::size_t states_total = 0;
  std::uint64_t merges_total = 0;
  std::optional<double> oracle_millis;  // present iff the oracle ran
  std::optional<bool> agree;            // present iff the oracle ran
};

struct ScalingParams {
  std::vector<TreeFamily> families{TreeFamily::random};
  int n_min = 4;
  int n_max = 12;
  int n_step = 1;
  int k = 2;
  int reps = 1;
  std::uint64_t seed = 1;
  bool with_oracle = false;
  int oracle_cap = 20;  // instances above this silently skip the oracle
};

// Millisecond floor below which timings are treated as noise for fitting.
inline constexpr double kFitNoiseFloorMillis = 5.0;

struct ScalingReport {
  std::vector<BenchRecord> records;
  // Least-squares slope of log(dp_millis) vs log(n); present only with at
  // least 4 distinct n above the noise floor.
  std::optional<double> fitted_exponent;
  double reference_exponent = 0.0;  // 2k + 3, reported, never asserted
  bool exponent_flagged = false;    // fitted > reference + 1 slack
  bool all_agree = true;            // false iff some oracle run disagreed
};

// Deterministic instance set per (family, n); one warm-up solve is
// discarded, then each rep re-solves the same instance and appends a
// record. Verifies the per-record hard state cap and throws
// InternalInconsistency if it is ever exceeded.
ScalingReport run_scaling(const ScalingParams& params);

// Largest admissible states_max for an (n, k) instance:
// (n+1) * 2^k * 2^k * (n+1)^k, saturated to the uint64 range.
std::uint64_t state_count_hard_cap(int n, int k);

// CSV schema (stable): one header line, then one row per record. Absent
// oracle fields are left empty.
std::string csv_header();
std::string csv_row(const BenchRecord& r);

std::string summary_table(const ScalingReport& report);

}  // namespace mcs
