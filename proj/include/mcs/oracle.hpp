#pragma once

#include <cstdint>
#include <unordered_map>

#include "mcs/colored_tree.hpp"
#include "mcs/consistency.hpp"
#include "mcs/rooted_view.hpp"
#include "mcs/state_tuple.hpp"

namespace mcs {

inline constexpr int kDefaultBruteForceCap = 20;
inline constexpr int kDefaultReferenceTableCap = 12;

struct OracleResult {
  int size = 0;
  VertexSubset witness;       // lexicographically smallest optimum
  std::uint64_t evaluated = 0;  // subsets examined
};

// Exhaustive ground truth: enumerates subsets by increasing cardinality
// (lexicographic within a cardinality) and returns the first consistent
// one. Always succeeds since S = V is consistent. Throws InstanceTooLarge
// when n exceeds the cap.
OracleResult brute_force_min(const ColoredTree& tree,
                             int cap = kDefaultBruteForceCap);

using ReferenceTable =
    std::unordered_map<StateTuple, std::uint32_t, StateTupleHash>;

// Literal per-subtree reference: enumerates every S within the subtree of
// v, groups by admissible signature and keeps the minimum cardinality per
// tuple. Tuples with no admissible subset are simply absent.
ReferenceTable reference_opt_table(const ColoredTree& tree,
                                   const RootedView& view, VertexId v,
                                   int cap = kDefaultReferenceTableCap);

}  // namespace mcs
