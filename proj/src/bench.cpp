#include "mcs/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

#include "mcs/dp_solver.hpp"
#include "mcs/errors.hpp"
#include "mcs/oracle.hpp"

namespace mcs {

namespace {

double millis_since(std::chrono::steady_clock::time_point start) {
  const auto elapsed = std::chrono::steady_clock::now() - start;
  return std::chrono::duration<double, std::milli>(elapsed).count();
}

std::string format_millis(double ms) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

}  // namespace

std::uint64_t state_count_hard_cap(int n, int k) {
  const std::uint64_t cap_max = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 cap = static_cast<unsigned __int128>(n) + 1;
  for (int i = 0; i < 2 * k; ++i) {
    cap *= 2;
    if (cap > cap_max) return cap_max;
  }
  for (int i = 0; i < k; ++i) {
    cap *= static_cast<unsigned __int128>(n) + 1;
    if (cap > cap_max) return cap_max;
  }
  return static_cast<std::uint64_t>(cap);
}

ScalingReport run_scaling(const ScalingParams& params) {
  if (params.n_min < 1 || params.n_max < params.n_min || params.n_step < 1) {
    throw InvalidSpec("bad n range for scaling run");
  }
  if (params.reps < 1) throw InvalidSpec("reps must be at least 1");

  ScalingReport report;
  report.reference_exponent = 2.0 * params.k + 3.0;

  for (size_t fi = 0; fi < params.families.size(); ++fi) {
    const TreeFamily family = params.families[fi];
    for (int n = params.n_min; n <= params.n_max; n += params.n_step) {
      GenSpec spec;
      spec.family = family;
      spec.n = n;
      spec.k = params.k;
      spec.coloring = ColoringScheme::uniform_random;
      spec.seed = derive_seed(params.seed,
                              {fi, static_cast<std::uint64_t>(n)});
      const ColoredTree tree = generate(spec);

      solve(tree);  // warm-up, discarded: small runs are allocation-heavy

      for (int rep = 0; rep < params.reps; ++rep) {
        const auto start = std::chrono::steady_clock::now();
        const SolveResult solved = solve(tree);
        const double dp_ms = millis_since(start);

        BenchRecord record;
        record.family = family_name(family);
        record.n = n;
        record.k = params.k;
        record.seed = spec.seed;
        record.opt_size = solved.solution.size;
        record.dp_millis = dp_ms;
        record.states_max = solved.stats.states_max;
        record.states_total = solved.stats.states_total;
        record.merges_total = solved.stats.merges_total;

        if (record.states_max > state_count_hard_cap(n, params.k)) {
          throw InternalInconsistency(
              "states_max " + std::to_string(record.states_max) +
              " exceeds the hard cap for n=" + std::to_string(n) +
              " k=" + std::to_string(params.k));
        }

        if (params.with_oracle && n <= params.oracle_cap) {
          const auto oracle_start = std::chrono::steady_clock::now();
          const OracleResult oracle = brute_force_min(tree, params.oracle_cap);
          record.oracle_millis = millis_since(oracle_start);
          record.agree = oracle.size == solved.solution.size;
          if (!*record.agree) report.all_agree = false;
        }
        report.records.push_back(std::move(record));
      }
    }
  }

  // Log-log fit over timings above the noise floor, at least 4 distinct n.
  std::map<int, bool> distinct;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int points = 0;
  for (const BenchRecord& r : report.records) {
    if (r.dp_millis < kFitNoiseFloorMillis) continue;
    distinct[r.n] = true;
    const double x = std::log(static_cast<double>(r.n));
    const double y = std::log(r.dp_millis);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++points;
  }
  if (distinct.size() >= 4) {
    const double denom = points * sxx - sx * sx;
    if (denom > 0) {
      report.fitted_exponent = (points * sxy - sx * sy) / denom;
      report.exponent_flagged =
          *report.fitted_exponent > report.reference_exponent + 1.0;
    }
  }
  return report;
}

std::string csv_header() {
  return "family,n,k,seed,opt_size,dp_millis,states_max,states_total,"
         "merges_total,oracle_millis,agree";
}

std::string csv_row(const BenchRecord& r) {
  std::ostringstream out;
  out << r.family << ',' << r.n << ',' << r.k << ',' << r.seed << ','
      << r.opt_size << ',' << format_millis(r.dp_millis) << ',' << r.states_max
      << ',' << r.states_total << ',' << r.merges_total << ',';
  if (r.oracle_millis) out << format_millis(*r.oracle_millis);
  out << ',';
  if (r.agree) out << (*r.agree ? "true" : "false");
  return out.str();
}

std::string summary_table(const ScalingReport& report) {
  std::ostringstream out;
  out << "runs: " << report.records.size() << "\n";
  if (report.fitted_exponent) {
    out << "fitted exponent: " << *report.fitted_exponent
        << " (reference " << report.reference_exponent << ")\n";
    if (report.exponent_flagged) {
      out << "warning: fitted exponent exceeds the reference bound\n";
    }
  } else {
    out << "fitted exponent: n/a (need 4 distinct n above "
        << kFitNoiseFloorMillis << " ms)\n";
  }
  if (!report.all_agree) out << "warning: oracle disagreement\n";
  return out.str();
}

}  // namespace mcs
