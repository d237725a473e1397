#include "mcs/rooted_view.hpp"

#include <cassert>

namespace mcs {

RootedView root_view(const ColoredTree& tree, VertexId root) {
  assert(root >= 1 && root <= tree.vertex_count());
  const auto n = static_cast<size_t>(tree.vertex_count());

  RootedView view;
  view.tree = &tree;
  view.root = root;
  view.parent.assign(n + 1, 0);
  view.children.assign(n + 1, {});
  view.post_order.reserve(n);

  // Iterative DFS; neighbor lists are ascending, so child lists are too.
  std::vector<std::pair<VertexId, size_t>> stack{{root, 0}};
  std::vector<bool> seen(n + 1, false);
  seen[static_cast<size_t>(root)] = true;
  while (!stack.empty()) {
    auto& [v, idx] = stack.back();
    const auto& nbrs = tree.neighbors(v);
    if (idx < nbrs.size()) {
      const VertexId w = nbrs[idx++];
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = true;
        view.parent[static_cast<size_t>(w)] = v;
        view.children[static_cast<size_t>(v)].push_back(w);
        stack.emplace_back(w, 0);
      }
    } else {
      view.post_order.push_back(v);
      stack.pop_back();
    }
  }
  return view;
}

std::vector<VertexId> RootedView::subtree(VertexId v) const {
  std::vector<VertexId> out;
  std::vector<VertexId> stack{v};
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    out.push_back(u);
    for (VertexId w : children[static_cast<size_t>(u)]) stack.push_back(w);
  }
  return out;
}

std::vector<VertexId> RootedView::prefix_scope(VertexId v,
                                               std::size_t j) const {
  assert(j <= children[static_cast<size_t>(v)].size());
  std::vector<VertexId> out{v};
  for (std::size_t i = 0; i < j; ++i) {
    const auto part = subtree(children[static_cast<size_t>(v)][i]);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace mcs
