#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcs/dp_solver.hpp"
#include "mcs/errors.hpp"
#include "mcs/generators.hpp"
#include "mcs/oracle.hpp"
#include "test_util.hpp"

using namespace mcs;

TEST_CASE("brute force fixtures") {
  SUBCASE("single vertex") {
    const OracleResult r = brute_force_min(test::single_vertex());
    CHECK(r.size == 1);
    CHECK(r.witness.members == std::vector<VertexId>{1});
  }

  SUBCASE("bi-colored edge needs both vertices") {
    const OracleResult r = brute_force_min(test::bicolored_edge());
    CHECK(r.size == 2);
    CHECK(r.witness.members == std::vector<VertexId>{1, 2});
    CHECK(r.evaluated == 4);  // {}, {1}, {2}, {1,2}
  }

  SUBCASE("monochromatic path needs one vertex") {
    const ColoredTree mono = test::make_tree(
        5, 1, {1, 1, 1, 1, 1}, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
    const OracleResult r = brute_force_min(mono);
    CHECK(r.size == 1);
    CHECK(r.witness.members == std::vector<VertexId>{1});  // lex smallest
  }
}

TEST_CASE("brute force witness is a lexicographically smallest optimum") {
  const OracleResult r = brute_force_min(test::path4_1122());
  CHECK(r.size == 2);
  CHECK(r.witness.members == std::vector<VertexId>{1, 3});
  CHECK(is_consistent_subset(test::path4_1122(), r.witness));
}

TEST_CASE("brute force rejects oversized instances") {
  const ColoredTree mono = test::make_tree(
      5, 1, {1, 1, 1, 1, 1}, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
  CHECK_THROWS_AS(brute_force_min(mono, 4), InstanceTooLarge);
}

TEST_CASE("oracle size bounds") {
  SplitMix64 rng(67);
  for (int iter = 0; iter < 40; ++iter) {
    const int n = static_cast<int>(1 + rng.next_below(10));
    const ColoredTree t = test::random_instance(rng, n, 3);
    const OracleResult r = brute_force_min(t);
    CHECK(r.size >= 1);
    CHECK(r.size <= n);
    CHECK(is_consistent_subset(t, r.witness));
  }
}

TEST_CASE("reference table fixtures") {
  SUBCASE("leaf holds the two leaf-case entries") {
    const ColoredTree one = test::make_tree(1, 2, {2}, {});
    const RootedView view = root_view(one, 1);
    const ReferenceTable table = reference_opt_table(one, view, 1);
    REQUIRE(table.size() == 2);
    const DPTable leaf = leaf_table(2, 2);
    for (const auto& [tuple, cost] : table) {
      const TableEntry* entry = leaf.find(tuple);
      REQUIRE(entry != nullptr);
      CHECK(entry->cost == cost);
    }
  }

  SUBCASE("bi-colored edge collapses four subsets into four tuples") {
    const ColoredTree edge = test::bicolored_edge();
    const RootedView view = root_view(edge, 1);
    const ReferenceTable table = reference_opt_table(edge, view, 1);
    CHECK(table.size() <= 4);
    const DistMatrix dm(edge);
    const StateTuple both =
        admissible_signature(edge, dm, view, 1, VertexSubset{{1, 2}});
    REQUIRE(table.contains(both));
    CHECK(table.at(both) == 2);
  }

  SUBCASE("cap is enforced") {
    const ColoredTree mono = test::make_tree(
        5, 1, {1, 1, 1, 1, 1}, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
    const RootedView view = root_view(mono, 1);
    CHECK_THROWS_AS(reference_opt_table(mono, view, 1, 4), InstanceTooLarge);
  }
}

TEST_CASE("two oracle routes agree on subtree optima") {
  // The cheapest consistent tuple of a subtree equals the brute-force
  // optimum of that subtree taken as a standalone tree.
  SplitMix64 rng(71);
  for (int iter = 0; iter < 25; ++iter) {
    const int n = static_cast<int>(1 + rng.next_below(9));
    const ColoredTree t = test::random_instance(rng, n, 2);
    const RootedView view = root_view(t, 1);
    for (VertexId v = 1; v <= n; ++v) {
      const auto scope = view.subtree(v);

      // Relabel the subtree as its own instance.
      std::vector<int> local(static_cast<size_t>(n) + 1, 0);
      for (size_t i = 0; i < scope.size(); ++i) {
        local[static_cast<size_t>(scope[i])] = static_cast<int>(i) + 1;
      }
      std::vector<Color> colors(scope.size());
      for (size_t i = 0; i < scope.size(); ++i) colors[i] = t.color(scope[i]);
      std::vector<Edge> edges;
      for (VertexId w : scope) {
        for (VertexId c : view.children[static_cast<size_t>(w)]) {
          edges.push_back({local[static_cast<size_t>(w)],
                           local[static_cast<size_t>(c)]});
        }
      }
      const ColoredTree sub = ColoredTree::create(
          static_cast<int>(scope.size()), t.color_count(), colors, edges);

      const ReferenceTable table = reference_opt_table(t, view, v);
      std::uint32_t best = UINT32_MAX;
      for (const auto& [tuple, cost] : table) {
        if (tuple.inconsistent_colors == 0) best = std::min(best, cost);
      }
      CHECK(best == static_cast<std::uint32_t>(brute_force_min(sub).size));
    }
  }
}

TEST_CASE("DP root table equals the reference table") {
  SplitMix64 rng(73);
  for (int iter = 0; iter < 30; ++iter) {
    const int n = static_cast<int>(1 + rng.next_below(10));
    const ColoredTree t = test::random_instance(rng, n, 2);
    const SolveTables st = build_tables(t, 1);
    const DPTable& dp_root = final_table(st, 1);
    const ReferenceTable reference = reference_opt_table(t, st.view, 1, 10);

    CHECK(dp_root.size() == reference.size());
    for (const auto& [tuple, cost] : reference) {
      const TableEntry* entry = dp_root.find(tuple);
      REQUIRE(entry != nullptr);
      CHECK(entry->cost == cost);
    }
    for (const auto& [tuple, entry] : dp_root.entries()) {
      REQUIRE(reference.contains(tuple));
      CHECK(reference.at(tuple) == entry.cost);
    }
  }
}
