#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "mcs/colored_tree.hpp"
#include "mcs/consistency.hpp"
#include "mcs/rooted_view.hpp"
#include "mcs/state_tuple.hpp"

namespace mcs {

// Traceback record: how a table entry was produced.
struct LeafChoice {
  bool included = false;  // whether the owning vertex is in S
};
struct Join {
  StateTuple left;   // tuple in the (v, j-1) prefix table
  StateTuple right;  // tuple in the child's final table
};
using Backref = std::variant<LeafChoice, Join>;

struct TableEntry {
  std::uint32_t cost = 0;
  Backref back;
};

// Sparse map from tuple to cheapest known entry. Iteration follows
// insertion order, which makes tie-breaking deterministic.
class DPTable {
 public:
  // Inserts or improves the entry for t. Equal-cost entries keep the
  // first-found backref. Returns true if the table changed.
  bool relax(const StateTuple& t, std::uint32_t cost, Backref back);

  const TableEntry* find(const StateTuple& t) const;

  std::size_t size() const { return entries_.size(); }

  const std::vector<std::pair<StateTuple, TableEntry>>& entries() const {
    return entries_;
  }

 private:
  std::vector<std::pair<StateTuple, TableEntry>> entries_;
  std::unordered_map<StateTuple, std::uint32_t, StateTupleHash> index_;
};

// Table over a single vertex: exactly the two subsets {} and {v}.
DPTable leaf_table(Color color, int k);

// Combines the signature of any admissible subset of the prefix tree
// (tuple referenced at the junction vertex v) with the signature of any
// admissible subset of the next child's subtree (tuple referenced at that
// child) into the signature of their union over the joined tree,
// referenced at v. Total function: the result is the same for every pair
// of subsets admissible for the inputs.
StateTuple merge_tuples(const StateTuple& left, const StateTuple& right,
                        int k);

// One child step of the DP: relaxes merge(t', t'') to cost' + cost'' over
// every entry pair. merge_counter, when given, is incremented per pair.
DPTable combine_tables(const DPTable& left, const DPTable& child, int k,
                       std::uint64_t* merge_counter = nullptr);

struct SolveStats {
  std::size_t states_max = 0;    // largest single (v, j) table
  std::size_t states_total = 0;  // entries summed over all (v, j) tables
  std::uint64_t merges_total = 0;
  std::vector<std::size_t> final_table_sizes;  // 1-based, per vertex
};

// All DP tables of one solve: prefix[v][j] covers v plus the subtrees of
// its first j children.
struct SolveTables {
  RootedView view;
  std::vector<std::vector<DPTable>> prefix;  // 1-based by vertex
  SolveStats stats;
};

SolveTables build_tables(const ColoredTree& tree, VertexId root);

const DPTable& final_table(const SolveTables& tables, VertexId v);

// Reconstructs a witness subset for the entry of t in prefix[v][j].
// Throws CorruptTable on a dangling back-reference.
VertexSubset traceback(const SolveTables& tables, VertexId v, std::size_t j,
                       const StateTuple& t);

struct Solution {
  VertexSubset subset;
  int size = 0;
};

struct SolveResult {
  Solution solution;
  SolveStats stats;
};

// Exact minimum consistent subset of the tree. The returned witness always
// passes is_consistent_subset; a failed verification raises
// InternalInconsistency. The optimum size is independent of the root.
SolveResult solve(const ColoredTree& tree, VertexId root = 1);

}  // namespace mcs
