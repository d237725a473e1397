#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mcs/colored_tree.hpp"
#include "mcs/rooted_view.hpp"
#include "mcs/state_tuple.hpp"

namespace mcs {

// A subset of vertices, kept sorted ascending without duplicates.
struct VertexSubset {
  std::vector<VertexId> members;

  static VertexSubset from_unsorted(std::vector<VertexId> vs);

  int size() const { return static_cast<int>(members.size()); }
  bool empty() const { return members.empty(); }
  bool contains(VertexId v) const;

  friend bool operator==(const VertexSubset&, const VertexSubset&) = default;
};

std::string to_string(const VertexSubset& s);

// All vertices of S at minimum distance from u; empty when S is empty.
std::vector<VertexId> nearest_set(const ColoredTree& tree,
                                  const VertexSubset& s, VertexId u);
std::vector<VertexId> nearest_set(const ColoredTree& tree,
                                  const DistMatrix& dm, const VertexSubset& s,
                                  VertexId u);

// True iff some nearest neighbor of u in S shares u's color. Always false
// for empty S.
bool is_vertex_consistent(const ColoredTree& tree, const VertexSubset& s,
                          VertexId u);
bool is_vertex_consistent(const ColoredTree& tree, const DistMatrix& dm,
                          const VertexSubset& s, VertexId u);

// True iff every vertex is consistent.
bool is_consistent_subset(const ColoredTree& tree, const VertexSubset& s);
bool is_consistent_subset(const ColoredTree& tree, const DistMatrix& dm,
                          const VertexSubset& s);

// Smallest-id inconsistent vertex, or nullopt when S is consistent.
std::optional<VertexId> first_inconsistent_vertex(const ColoredTree& tree,
                                                  const VertexSubset& s);
std::optional<VertexId> first_inconsistent_vertex(const ColoredTree& tree,
                                                  const DistMatrix& dm,
                                                  const VertexSubset& s);

// The unique tuple for which S is admissible within the given scope. The
// scope must induce a connected subgraph containing ref (a rooted subtree
// or a prefix of one), and S must lie inside it. This is the ground-truth
// definition the DP merge is validated against.
StateTuple admissible_signature(const ColoredTree& tree, const DistMatrix& dm,
                                std::span<const VertexId> scope, VertexId ref,
                                const VertexSubset& s);

// Signature over the full subtree of v in a rooted view.
StateTuple admissible_signature(const ColoredTree& tree, const DistMatrix& dm,
                                const RootedView& view, VertexId v,
                                const VertexSubset& s);
StateTuple admissible_signature(const ColoredTree& tree,
                                const RootedView& view, VertexId v,
                                const VertexSubset& s);

}  // namespace mcs
