#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <map>

#include "mcs/bench.hpp"
#include "mcs/errors.hpp"

using namespace mcs;

TEST_CASE("csv schema is frozen") {
  CHECK(csv_header() ==
        "family,n,k,seed,opt_size,dp_millis,states_max,states_total,"
        "merges_total,oracle_millis,agree");

  BenchRecord r;
  r.family = "path";
  r.n = 5;
  r.k = 2;
  r.seed = 9;
  r.opt_size = 2;
  r.dp_millis = 1.25;
  r.states_max = 10;
  r.states_total = 31;
  r.merges_total = 44;
  CHECK(csv_row(r) == "path,5,2,9,2,1.250,10,31,44,,");

  r.oracle_millis = 0.5;
  r.agree = true;
  CHECK(csv_row(r) == "path,5,2,9,2,1.250,10,31,44,0.500,true");
}

TEST_CASE("hard state cap instantiates the worst-case bound") {
  // (n+1) * 2^k * 2^k * (n+1)^k
  CHECK(state_count_hard_cap(3, 1) == 4ull * 2 * 2 * 4);
  CHECK(state_count_hard_cap(10, 2) == 11ull * 4 * 4 * 121);
  CHECK(state_count_hard_cap(1000, 32) ==
        std::numeric_limits<std::uint64_t>::max());  // saturates
}

TEST_CASE("scaling runs are deterministic and oracle-checked") {
  ScalingParams params;
  params.families = {TreeFamily::random, TreeFamily::path};
  params.n_min = 4;
  params.n_max = 10;
  params.n_step = 3;
  params.k = 2;
  params.reps = 3;
  params.seed = 5;
  params.with_oracle = true;

  const ScalingReport report = run_scaling(params);
  // 2 families x n in {4,7,10} x 3 reps.
  REQUIRE(report.records.size() == 18);
  CHECK(report.all_agree);

  std::map<std::pair<std::string, int>, int> opt_by_instance;
  for (const BenchRecord& r : report.records) {
    CHECK(r.states_max <= state_count_hard_cap(r.n, r.k));
    REQUIRE(r.agree.has_value());
    CHECK(*r.agree);
    REQUIRE(r.oracle_millis.has_value());
    const auto key = std::make_pair(r.family, r.n);
    auto [it, inserted] = opt_by_instance.try_emplace(key, r.opt_size);
    // Reps re-solve the same instance, so opt_size cannot move.
    CHECK(it->second == r.opt_size);
  }

  const ScalingReport again = run_scaling(params);
  REQUIRE(again.records.size() == report.records.size());
  for (size_t i = 0; i < report.records.size(); ++i) {
    CHECK(again.records[i].opt_size == report.records[i].opt_size);
    CHECK(again.records[i].seed == report.records[i].seed);
  }
}

TEST_CASE("monochromatic scaling always reports optimum 1") {
  ScalingParams params;
  params.families = {TreeFamily::random};
  params.n_min = 3;
  params.n_max = 9;
  params.n_step = 2;
  params.k = 1;
  params.reps = 1;
  params.seed = 11;
  const ScalingReport report = run_scaling(params);
  for (const BenchRecord& r : report.records) CHECK(r.opt_size == 1);
}

TEST_CASE("oracle is skipped above its cap") {
  ScalingParams params;
  params.families = {TreeFamily::path};
  params.n_min = 4;
  params.n_max = 8;
  params.n_step = 4;
  params.k = 2;
  params.reps = 1;
  params.seed = 2;
  params.with_oracle = true;
  params.oracle_cap = 5;
  const ScalingReport report = run_scaling(params);
  REQUIRE(report.records.size() == 2);
  CHECK(report.records[0].agree.has_value());
  CHECK_FALSE(report.records[1].agree.has_value());
}

TEST_CASE("exponent fit engages above the noise floor") {
  // Complete binary trees with k=3 run tens of milliseconds per solve at
  // these sizes, well above the 5 ms floor on any plausible machine.
  ScalingParams params;
  params.families = {TreeFamily::binary};
  params.n_min = 110;
  params.n_max = 200;
  params.n_step = 30;
  params.k = 3;
  params.reps = 1;
  params.seed = 13;
  const ScalingReport report = run_scaling(params);
  REQUIRE(report.records.size() == 4);
  REQUIRE(report.fitted_exponent.has_value());
  CHECK(report.reference_exponent == 9.0);
  // Observed growth stays far below the worst-case guarantee.
  CHECK(*report.fitted_exponent < report.reference_exponent + 1.0);
  CHECK_FALSE(report.exponent_flagged);
}

TEST_CASE("bad ranges are rejected") {
  ScalingParams params;
  params.n_min = 5;
  params.n_max = 4;
  CHECK_THROWS_AS(run_scaling(params), InvalidSpec);
  params.n_max = 6;
  params.reps = 0;
  CHECK_THROWS_AS(run_scaling(params), InvalidSpec);
}
