#include "mcs/consistency.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <sstream>

namespace mcs {

namespace {

constexpr int kUnreachable = std::numeric_limits<int>::max();

// dist(u, S) as a plain int, kUnreachable when S is empty.
int dist_to_subset(const DistMatrix& dm, const VertexSubset& s, VertexId u) {
  int best = kUnreachable;
  for (VertexId m : s.members) best = std::min(best, dm(u, m));
  return best;
}

bool has_same_color_at(const ColoredTree& tree, const DistMatrix& dm,
                       const VertexSubset& s, VertexId u, int dist) {
  for (VertexId m : s.members) {
    if (dm(u, m) == dist && tree.color(m) == tree.color(u)) return true;
  }
  return false;
}

}  // namespace

VertexSubset VertexSubset::from_unsorted(std::vector<VertexId> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return VertexSubset{std::move(vs)};
}

bool VertexSubset::contains(VertexId v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

std::string to_string(const VertexSubset& s) {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < s.members.size(); ++i) {
    if (i) out << ",";
    out << s.members[i];
  }
  out << "}";
  return out.str();
}

std::vector<VertexId> nearest_set(const ColoredTree& tree,
                                  const DistMatrix& dm, const VertexSubset& s,
                                  VertexId u) {
  (void)tree;
  std::vector<VertexId> out;
  const int best = dist_to_subset(dm, s, u);
  if (best == kUnreachable) return out;
  for (VertexId m : s.members) {
    if (dm(u, m) == best) out.push_back(m);
  }
  return out;
}

std::vector<VertexId> nearest_set(const ColoredTree& tree,
                                  const VertexSubset& s, VertexId u) {
  std::vector<VertexId> out;
  if (s.empty()) return out;
  const auto dist = bfs_distances(tree, u);
  int best = kUnreachable;
  for (VertexId m : s.members) best = std::min(best, dist[static_cast<size_t>(m)]);
  for (VertexId m : s.members) {
    if (dist[static_cast<size_t>(m)] == best) out.push_back(m);
  }
  return out;
}

bool is_vertex_consistent(const ColoredTree& tree, const DistMatrix& dm,
                          const VertexSubset& s, VertexId u) {
  const int best = dist_to_subset(dm, s, u);
  if (best == kUnreachable) return false;  // empty S: every vertex inconsistent
  return has_same_color_at(tree, dm, s, u, best);
}

bool is_vertex_consistent(const ColoredTree& tree, const VertexSubset& s,
                          VertexId u) {
  if (s.empty()) return false;
  const auto dist = bfs_distances(tree, u);
  int best = kUnreachable;
  for (VertexId m : s.members) best = std::min(best, dist[static_cast<size_t>(m)]);
  for (VertexId m : s.members) {
    if (dist[static_cast<size_t>(m)] == best && tree.color(m) == tree.color(u)) {
      return true;
    }
  }
  return false;
}

std::optional<VertexId> first_inconsistent_vertex(const ColoredTree& tree,
                                                  const DistMatrix& dm,
                                                  const VertexSubset& s) {
  for (VertexId u = 1; u <= tree.vertex_count(); ++u) {
    if (!is_vertex_consistent(tree, dm, s, u)) return u;
  }
  return std::nullopt;
}

std::optional<VertexId> first_inconsistent_vertex(const ColoredTree& tree,
                                                  const VertexSubset& s) {
  const DistMatrix dm(tree);
  return first_inconsistent_vertex(tree, dm, s);
}

bool is_consistent_subset(const ColoredTree& tree, const DistMatrix& dm,
                          const VertexSubset& s) {
  return !first_inconsistent_vertex(tree, dm, s).has_value();
}

bool is_consistent_subset(const ColoredTree& tree, const VertexSubset& s) {
  const DistMatrix dm(tree);
  return is_consistent_subset(tree, dm, s);
}

StateTuple admissible_signature(const ColoredTree& tree, const DistMatrix& dm,
                                std::span<const VertexId> scope, VertexId ref,
                                const VertexSubset& s) {
  const int k = tree.color_count();
  assert(k <= kMaxTupleColors);

  StateTuple t;
  t.slack.assign(static_cast<size_t>(k), ExtDist::finite(0));

  const int ref_dist = dist_to_subset(dm, s, ref);
  t.dist_to_set = ref_dist == kUnreachable
                      ? ExtDist::infinity()
                      : ExtDist::finite(static_cast<std::uint32_t>(ref_dist));
  for (VertexId m : s.members) {
    if (dm(ref, m) == ref_dist) t.nearest_colors |= mask_bit(tree.color(m));
  }

  // Aggregate per color before clamping: min of slacks over inconsistent
  // vertices, max over all vertices. Individual negative terms stay
  // unclamped; only the aggregate is floored at zero.
  constexpr long long kNone = std::numeric_limits<long long>::max();
  std::vector<long long> min_inconsistent(static_cast<size_t>(k), kNone);
  std::vector<long long> max_all(static_cast<size_t>(k), kNone);
  const bool empty_set = s.empty();

  for (VertexId w : scope) {
    const auto c = static_cast<size_t>(tree.color(w)) - 1;
    if (empty_set) {
      t.inconsistent_colors |= mask_bit(tree.color(w));
      continue;
    }
    const int dw = dist_to_subset(dm, s, w);
    const long long slack = static_cast<long long>(dw) - dm(w, ref);
    if (max_all[c] == kNone || slack > max_all[c]) max_all[c] = slack;
    if (!has_same_color_at(tree, dm, s, w, dw)) {
      t.inconsistent_colors |= mask_bit(tree.color(w));
      if (min_inconsistent[c] == kNone || slack < min_inconsistent[c]) {
        min_inconsistent[c] = slack;
      }
    }
  }

  for (Color i = 1; i <= k; ++i) {
    const auto c = static_cast<size_t>(i) - 1;
    if (mask_has(t.inconsistent_colors, i)) {
      t.slack[c] = empty_set
                       ? ExtDist::infinity()
                       : ExtDist::finite(static_cast<std::uint32_t>(
                             std::max(0LL, min_inconsistent[c])));
    } else {
      // Consistent color: 0 when the color is absent from the scope.
      t.slack[c] = max_all[c] == kNone
                       ? ExtDist::finite(0)
                       : ExtDist::finite(static_cast<std::uint32_t>(
                             std::max(0LL, max_all[c])));
    }
  }
  return t;
}

StateTuple admissible_signature(const ColoredTree& tree, const DistMatrix& dm,
                                const RootedView& view, VertexId v,
                                const VertexSubset& s) {
  const auto scope = view.subtree(v);
  return admissible_signature(tree, dm, scope, v, s);
}

StateTuple admissible_signature(const ColoredTree& tree,
                                const RootedView& view, VertexId v,
                                const VertexSubset& s) {
  const DistMatrix dm(tree);
  return admissible_signature(tree, dm, view, v, s);
}

}  // namespace mcs
