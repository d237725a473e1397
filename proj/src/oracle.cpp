#include "mcs/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "mcs/errors.hpp"

namespace mcs {

namespace {

// Consistency of S given the distance matrix; early exit on the first
// offending vertex.
bool consistent(const ColoredTree& tree, const DistMatrix& dm,
                const std::vector<VertexId>& members) {
  const int n = tree.vertex_count();
  for (VertexId u = 1; u <= n; ++u) {
    int best = -1;
    for (VertexId m : members) {
      const int d = dm(u, m);
      if (best < 0 || d < best) best = d;
    }
    if (best < 0) return false;
    bool ok = false;
    for (VertexId m : members) {
      if (dm(u, m) == best && tree.color(m) == tree.color(u)) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

// Advances indices to the next m-combination of 1..n in lexicographic
// order; false when exhausted.
bool next_combination(std::vector<VertexId>& ids, int n) {
  const int m = static_cast<int>(ids.size());
  for (int i = m - 1; i >= 0; --i) {
    if (ids[static_cast<size_t>(i)] < n - (m - 1 - i)) {
      ++ids[static_cast<size_t>(i)];
      for (int j = i + 1; j < m; ++j) {
        ids[static_cast<size_t>(j)] = ids[static_cast<size_t>(j - 1)] + 1;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

OracleResult brute_force_min(const ColoredTree& tree, int cap) {
  const int n = tree.vertex_count();
  if (n > cap) {
    throw InstanceTooLarge("brute force over " + std::to_string(n) +
                           " vertices exceeds the cap of " +
                           std::to_string(cap));
  }
  const DistMatrix dm(tree);

  OracleResult result;
  for (int m = 0; m <= n; ++m) {
    std::vector<VertexId> ids(static_cast<size_t>(m));
    std::iota(ids.begin(), ids.end(), 1);
    do {
      ++result.evaluated;
      if (consistent(tree, dm, ids)) {
        result.size = m;
        result.witness = VertexSubset{ids};
        return result;
      }
    } while (next_combination(ids, n));
  }
  // Unreachable: S = V is always consistent.
  throw InternalInconsistency("no consistent subset found by enumeration");
}

ReferenceTable reference_opt_table(const ColoredTree& tree,
                                   const RootedView& view, VertexId v,
                                   int cap) {
  const auto scope = view.subtree(v);
  const int m = static_cast<int>(scope.size());
  if (m > cap) {
    throw InstanceTooLarge("reference table over " + std::to_string(m) +
                           " vertices exceeds the cap of " +
                           std::to_string(cap));
  }
  const DistMatrix dm(tree);

  ReferenceTable table;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<VertexId> members;
    for (int b = 0; b < m; ++b) {
      if ((mask >> b) & 1u) members.push_back(scope[static_cast<size_t>(b)]);
    }
    const auto subset = VertexSubset::from_unsorted(std::move(members));
    const StateTuple t = admissible_signature(tree, dm, scope, v, subset);
    const auto cost = static_cast<std::uint32_t>(subset.size());
    auto [it, inserted] = table.try_emplace(t, cost);
    if (!inserted && cost < it->second) it->second = cost;
  }
  return table;
}

}  // namespace mcs
