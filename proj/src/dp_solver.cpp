#include "mcs/dp_solver.hpp"

#include <algorithm>
#include <cassert>

#include "mcs/errors.hpp"

namespace mcs {

bool DPTable::relax(const StateTuple& t, std::uint32_t cost, Backref back) {
  auto [it, inserted] = index_.try_emplace(t, entries_.size());
  if (inserted) {
    entries_.emplace_back(t, TableEntry{cost, std::move(back)});
    return true;
  }
  TableEntry& entry = entries_[it->second].second;
  if (cost < entry.cost) {  // ties keep the first-found backref
    entry.cost = cost;
    entry.back = std::move(back);
    return true;
  }
  return false;
}

const TableEntry* DPTable::find(const StateTuple& t) const {
  const auto it = index_.find(t);
  return it == index_.end() ? nullptr : &entries_[it->second].second;
}

DPTable leaf_table(Color color, int k) {
  DPTable table;

  StateTuple skip;  // S = {}
  skip.dist_to_set = ExtDist::infinity();
  skip.inconsistent_colors = mask_bit(color);
  skip.slack.assign(static_cast<size_t>(k), ExtDist::finite(0));
  skip.slack[static_cast<size_t>(color) - 1] = ExtDist::infinity();
  table.relax(skip, 0, LeafChoice{false});

  StateTuple take;  // S = {v}
  take.dist_to_set = ExtDist::finite(0);
  take.nearest_colors = mask_bit(color);
  take.slack.assign(static_cast<size_t>(k), ExtDist::finite(0));
  table.relax(take, 1, LeafChoice{true});

  return table;
}

StateTuple merge_tuples(const StateTuple& left, const StateTuple& right,
                        int k) {
  assert(static_cast<int>(left.slack.size()) == k);
  assert(static_cast<int>(right.slack.size()) == k);

  // Distances in the right tuple are referenced at the child; seen from
  // the junction vertex they grow by the connecting edge.
  const ExtDist right_lifted = right.dist_to_set.plus_one();
  const ExtDist left_lifted = left.dist_to_set.plus_one();

  StateTuple out;
  out.dist_to_set = min(left.dist_to_set, right_lifted);
  if (left.dist_to_set < right_lifted) {
    out.nearest_colors = left.nearest_colors;
  } else if (right_lifted < left.dist_to_set) {
    out.nearest_colors = right.nearest_colors;
  } else {
    out.nearest_colors = left.nearest_colors | right.nearest_colors;
  }

  out.slack.resize(static_cast<size_t>(k));
  for (Color i = 1; i <= k; ++i) {
    const auto c = static_cast<size_t>(i) - 1;
    const ExtDist rl = left.slack[c];
    const ExtDist rr = right.slack[c];
    const bool in_left_nearest = mask_has(left.nearest_colors, i);
    const bool in_right_nearest = mask_has(right.nearest_colors, i);

    const bool left_consistent =
        mask_has(left.inconsistent_colors, i)
            ? (in_right_nearest && rl >= right_lifted)
            : (rl <= right_lifted || in_right_nearest);
    const bool right_consistent =
        mask_has(right.inconsistent_colors, i)
            ? (in_left_nearest && rr >= left_lifted)
            : (rr <= left_lifted || in_left_nearest);

    // Contributions re-referenced at the junction vertex: the right side
    // shifts down one edge, never below zero.
    const ExtDist from_left = min(rl, right_lifted);
    const ExtDist from_right = min(rr, left_lifted).monus_one();

    if (left_consistent && right_consistent) {
      out.slack[c] = max(from_left, from_right);
    } else {
      out.inconsistent_colors |= mask_bit(i);
      // Only sides that stay inconsistent contribute to the minimum.
      const ExtDist a = left_consistent ? ExtDist::infinity() : from_left;
      const ExtDist b = right_consistent ? ExtDist::infinity() : from_right;
      out.slack[c] = min(a, b);
    }
  }
  return out;
}

DPTable combine_tables(const DPTable& left, const DPTable& child, int k,
                       std::uint64_t* merge_counter) {
  DPTable out;
  for (const auto& [lt, le] : left.entries()) {
    for (const auto& [rt, re] : child.entries()) {
      if (merge_counter != nullptr) ++*merge_counter;
      StateTuple merged = merge_tuples(lt, rt, k);
      out.relax(merged, le.cost + re.cost, Join{lt, rt});
    }
  }
  return out;
}

SolveTables build_tables(const ColoredTree& tree, VertexId root) {
  const int k = tree.color_count();
  if (k > kMaxTupleColors) {
    throw InstanceTooLarge("state tuples support at most " +
                           std::to_string(kMaxTupleColors) + " colors, got " +
                           std::to_string(k));
  }

  SolveTables st;
  st.view = root_view(tree, root);
  st.prefix.resize(static_cast<size_t>(tree.vertex_count()) + 1);
  st.stats.final_table_sizes.assign(
      static_cast<size_t>(tree.vertex_count()) + 1, 0);

  for (VertexId v : st.view.post_order) {
    const auto& kids = st.view.children[static_cast<size_t>(v)];
    auto& tabs = st.prefix[static_cast<size_t>(v)];
    tabs.reserve(kids.size() + 1);
    // j = 0 covers the single vertex v, computed as a leaf.
    tabs.push_back(leaf_table(tree.color(v), k));
    for (VertexId child : kids) {
      tabs.push_back(combine_tables(tabs.back(),
                                    st.prefix[static_cast<size_t>(child)].back(),
                                    k, &st.stats.merges_total));
    }
    for (const DPTable& t : tabs) {
      st.stats.states_total += t.size();
      st.stats.states_max = std::max(st.stats.states_max, t.size());
    }
    st.stats.final_table_sizes[static_cast<size_t>(v)] = tabs.back().size();
  }
  return st;
}

const DPTable& final_table(const SolveTables& tables, VertexId v) {
  return tables.prefix[static_cast<size_t>(v)].back();
}

VertexSubset traceback(const SolveTables& tables, VertexId v, std::size_t j,
                       const StateTuple& t) {
  std::vector<VertexId> picked;
  struct Frame {
    VertexId v;
    std::size_t j;
    StateTuple t;
  };
  std::vector<Frame> stack{{v, j, t}};
  while (!stack.empty()) {
    Frame frame = std::move(stack.back());
    stack.pop_back();
    const auto& tabs = tables.prefix[static_cast<size_t>(frame.v)];
    if (frame.j >= tabs.size()) {
      throw CorruptTable("no table for vertex " + std::to_string(frame.v) +
                         " prefix " + std::to_string(frame.j));
    }
    const TableEntry* entry = tabs[frame.j].find(frame.t);
    if (entry == nullptr) {
      throw CorruptTable("dangling back-reference at vertex " +
                         std::to_string(frame.v) + " prefix " +
                         std::to_string(frame.j) + ": " + to_string(frame.t));
    }
    if (const auto* leaf = std::get_if<LeafChoice>(&entry->back)) {
      if (frame.j != 0) {
        throw CorruptTable("leaf choice stored for a non-trivial prefix of "
                           "vertex " +
                           std::to_string(frame.v));
      }
      if (leaf->included) picked.push_back(frame.v);
    } else {
      const auto& join = std::get<Join>(entry->back);
      if (frame.j == 0) {
        throw CorruptTable("join stored for the trivial prefix of vertex " +
                           std::to_string(frame.v));
      }
      const VertexId child =
          tables.view.children[static_cast<size_t>(frame.v)][frame.j - 1];
      const std::size_t child_arity =
          tables.view.children[static_cast<size_t>(child)].size();
      stack.push_back({frame.v, frame.j - 1, join.left});
      stack.push_back({child, child_arity, join.right});
    }
  }
  return VertexSubset::from_unsorted(std::move(picked));
}

SolveResult solve(const ColoredTree& tree, VertexId root) {
  SolveTables st = build_tables(tree, root);
  const DPTable& root_table = final_table(st, root);

  const std::pair<StateTuple, TableEntry>* best = nullptr;
  for (const auto& entry : root_table.entries()) {
    if (entry.first.inconsistent_colors != 0) continue;
    if (best == nullptr || entry.second.cost < best->second.cost) {
      best = &entry;
    }
  }
  if (best == nullptr) {
    // S = V is always consistent, so the root table must offer one.
    throw InternalInconsistency(
        "root table has no entry without inconsistent colors");
  }

  const auto arity =
      st.view.children[static_cast<size_t>(root)].size();
  VertexSubset witness = traceback(st, root, arity, best->first);
  if (witness.size() != static_cast<int>(best->second.cost)) {
    throw InternalInconsistency(
        "traced witness size " + std::to_string(witness.size()) +
        " differs from table cost " + std::to_string(best->second.cost));
  }
  if (!is_consistent_subset(tree, witness)) {
    throw InternalInconsistency("traced witness " + to_string(witness) +
                                " failed consistency verification");
  }

  SolveResult result;
  result.solution.size = static_cast<int>(best->second.cost);
  result.solution.subset = std::move(witness);
  result.stats = std::move(st.stats);
  return result;
}

}  // namespace mcs
