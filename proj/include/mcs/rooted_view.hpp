#pragma once

#include <cstddef>
#include <vector>

#include "mcs/colored_tree.hpp"

namespace mcs {

// Rooted orientation of a ColoredTree. Child lists are ascending by vertex
// id; post_order visits children before parents. The viewed tree must
// outlive the view.
struct RootedView {
  const ColoredTree* tree = nullptr;
  VertexId root = 0;
  std::vector<VertexId> parent;                 // 1-based; parent[root] == 0
  std::vector<std::vector<VertexId>> children;  // 1-based, ascending
  std::vector<VertexId> post_order;

  // Vertices of the subtree rooted at v, in preorder starting with v.
  std::vector<VertexId> subtree(VertexId v) const;

  // Vertices of the prefix subtree: v plus the subtrees of its first j
  // children (j == 0 is v alone).
  std::vector<VertexId> prefix_scope(VertexId v, std::size_t j) const;
};

RootedView root_view(const ColoredTree& tree, VertexId root);

}  // namespace mcs
