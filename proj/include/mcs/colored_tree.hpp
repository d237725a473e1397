#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace mcs {

using VertexId = int;  // vertex ids are 1-based everywhere
using Color = int;     // color ids are 1-based, in 1..k

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(Edge, Edge) = default;
  friend auto operator<=>(Edge, Edge) = default;
};

// Immutable vertex-colored tree. Always connected and acyclic with exactly
// n-1 edges; every color lies in 1..k. Edges are kept in canonical form
// (u < v, sorted lexicographically) and adjacency lists ascending.
class ColoredTree {
 public:
  // colors[i] is the color of vertex i+1. Throws ValidationError on any
  // violated invariant.
  static ColoredTree create(int n, int k, std::vector<Color> colors,
                            std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int color_count() const { return k_; }

  Color color(VertexId v) const { return color_[static_cast<size_t>(v)]; }

  const std::vector<VertexId>& neighbors(VertexId v) const {
    return adj_[static_cast<size_t>(v)];
  }

  // Canonical edge list: each edge with u < v, sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }

  // Colors of vertices 1..n in order (index 0 is vertex 1).
  std::vector<Color> color_sequence() const;

 private:
  ColoredTree() = default;

  int n_ = 0;
  int k_ = 0;
  std::vector<Color> color_;               // 1-based, [0] unused
  std::vector<Edge> edges_;                // canonical
  std::vector<std::vector<VertexId>> adj_; // 1-based, [0] unused
};

// Reads the instance file format:
//   line 1: "mcs 1"
//   line 2: "n k"
//   line 3: n space-separated colors for vertices 1..n
//   then n-1 lines "u v"
// '#' starts a comment to end of line; blank lines are ignored.
// Throws ParseError / ValidationError naming the offending line.
ColoredTree parse_instance(std::istream& in);
ColoredTree parse_instance(std::string_view text);

// Canonical serialization of the same format (re-parsing yields an
// identical tree; serializing again yields identical bytes).
std::string serialize(const ColoredTree& tree);

// Edge counts along the unique tree paths from source. Result is 1-based
// with result[0] == -1; result[source] == 0.
std::vector<int> bfs_distances(const ColoredTree& tree, VertexId source);

// All-pairs distance matrix built from n BFS runs.
class DistMatrix {
 public:
  explicit DistMatrix(const ColoredTree& tree);

  int operator()(VertexId u, VertexId v) const {
    return rows_[static_cast<size_t>(u)][static_cast<size_t>(v)];
  }

  const std::vector<int>& row(VertexId u) const {
    return rows_[static_cast<size_t>(u)];
  }

 private:
  std::vector<std::vector<int>> rows_;
};

}  // namespace mcs
