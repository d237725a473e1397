#include "mcs/colored_tree.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <numeric>
#include <sstream>
#include <string>

#include "mcs/errors.hpp"

namespace mcs {

namespace {

// Union-find over 1..n, used to catch the edge that closes a cycle.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<size_t>(n) + 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[static_cast<size_t>(x)] != x) {
      parent_[static_cast<size_t>(x)] =
          parent_[static_cast<size_t>(parent_[static_cast<size_t>(x)])];
      x = parent_[static_cast<size_t>(x)];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<size_t>(a)] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

Edge normalized(Edge e) {
  if (e.u > e.v) std::swap(e.u, e.v);
  return e;
}

struct LogicalLine {
  std::string text;
  int number = 0;  // 1-based physical line number
};

std::vector<LogicalLine> logical_lines(std::istream& in) {
  std::vector<LogicalLine> out;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    const auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = raw.find_last_not_of(" \t\r");
    out.push_back({raw.substr(first, last - first + 1), lineno});
  }
  return out;
}

std::vector<long long> parse_ints(const LogicalLine& line, size_t expected,
                                  const char* what) {
  std::istringstream iss(line.text);
  std::vector<long long> vals;
  long long v = 0;
  while (iss >> v) vals.push_back(v);
  if (!iss.eof()) {
    throw ParseError("line " + std::to_string(line.number) +
                     ": expected integers for " + what);
  }
  if (vals.size() != expected) {
    throw ParseError("line " + std::to_string(line.number) + ": expected " +
                     std::to_string(expected) + " value(s) for " + what +
                     ", got " + std::to_string(vals.size()));
  }
  return vals;
}

}  // namespace

ColoredTree ColoredTree::create(int n, int k, std::vector<Color> colors,
                                std::vector<Edge> edges) {
  if (n < 1) throw ValidationError("vertex count must be positive");
  if (k < 1) throw ValidationError("color count must be positive");
  if (colors.size() != static_cast<size_t>(n)) {
    throw ValidationError("expected " + std::to_string(n) + " colors, got " +
                          std::to_string(colors.size()));
  }
  for (int i = 0; i < n; ++i) {
    if (colors[static_cast<size_t>(i)] < 1 ||
        colors[static_cast<size_t>(i)] > k) {
      throw ValidationError("vertex " + std::to_string(i + 1) + " has color " +
                            std::to_string(colors[static_cast<size_t>(i)]) +
                            " outside 1.." + std::to_string(k));
    }
  }
  if (edges.size() != static_cast<size_t>(n) - 1) {
    throw ValidationError("expected " + std::to_string(n - 1) +
                          " edges, got " + std::to_string(edges.size()));
  }

  DisjointSets dsu(n);
  for (Edge& e : edges) {
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) {
      throw ValidationError("edge {" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + "} has an endpoint outside 1.." +
                            std::to_string(n));
    }
    if (e.u == e.v) {
      throw ValidationError("self-loop at vertex " + std::to_string(e.u));
    }
    e = normalized(e);
    if (!dsu.unite(e.u, e.v)) {
      throw ValidationError("edge {" + std::to_string(e.u) + "," +
                            std::to_string(e.v) +
                            "} creates a cycle (duplicate edge or "
                            "disconnected instance)");
    }
  }

  ColoredTree t;
  t.n_ = n;
  t.k_ = k;
  t.color_.resize(static_cast<size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) {
    t.color_[static_cast<size_t>(i) + 1] = colors[static_cast<size_t>(i)];
  }
  std::sort(edges.begin(), edges.end());
  t.edges_ = std::move(edges);
  t.adj_.resize(static_cast<size_t>(n) + 1);
  for (const Edge& e : t.edges_) {
    t.adj_[static_cast<size_t>(e.u)].push_back(e.v);
    t.adj_[static_cast<size_t>(e.v)].push_back(e.u);
  }
  for (auto& nbrs : t.adj_) std::sort(nbrs.begin(), nbrs.end());
  return t;
}

std::vector<Color> ColoredTree::color_sequence() const {
  return {color_.begin() + 1, color_.end()};
}

ColoredTree parse_instance(std::istream& in) {
  const std::vector<LogicalLine> lines = logical_lines(in);
  size_t pos = 0;
  auto next_line = [&](const char* what) -> const LogicalLine& {
    if (pos >= lines.size()) {
      throw ParseError("unexpected end of input: missing " +
                       std::string(what));
    }
    return lines[pos++];
  };

  const LogicalLine& header = next_line("header line 'mcs 1'");
  if (header.text != "mcs 1") {
    throw ParseError("line " + std::to_string(header.number) +
                     ": expected header 'mcs 1'");
  }

  const LogicalLine& size_line = next_line("size line 'n k'");
  const auto nk = parse_ints(size_line, 2, "'n k'");
  if (nk[0] < 1 || nk[0] > 1'000'000) {
    throw ValidationError("line " + std::to_string(size_line.number) +
                          ": vertex count must be in 1..1000000");
  }
  if (nk[1] < 1 || nk[1] > nk[0] * 1024 + 1024) {
    throw ValidationError("line " + std::to_string(size_line.number) +
                          ": color count must be positive and sane");
  }
  const int n = static_cast<int>(nk[0]);
  const int k = static_cast<int>(nk[1]);

  const LogicalLine& color_line = next_line("color line");
  const auto raw_colors =
      parse_ints(color_line, static_cast<size_t>(n), "vertex colors");
  std::vector<Color> colors(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const long long c = raw_colors[static_cast<size_t>(i)];
    if (c < 1 || c > k) {
      throw ValidationError("line " + std::to_string(color_line.number) +
                            ": color " + std::to_string(c) + " of vertex " +
                            std::to_string(i + 1) + " outside 1.." +
                            std::to_string(k));
    }
    colors[static_cast<size_t>(i)] = static_cast<Color>(c);
  }

  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(n) - 1);
  DisjointSets dsu(n);
  for (int i = 0; i + 1 < n; ++i) {
    if (pos >= lines.size()) {
      throw ValidationError("unexpected end of input: expected " +
                            std::to_string(n - 1) + " edge lines, got " +
                            std::to_string(i));
    }
    const LogicalLine& edge_line = lines[pos++];
    const auto uv = parse_ints(edge_line, 2, "edge endpoints");
    if (uv[0] < 1 || uv[0] > n || uv[1] < 1 || uv[1] > n) {
      throw ValidationError("line " + std::to_string(edge_line.number) +
                            ": edge endpoint outside 1.." + std::to_string(n));
    }
    if (uv[0] == uv[1]) {
      throw ValidationError("line " + std::to_string(edge_line.number) +
                            ": self-loop at vertex " + std::to_string(uv[0]));
    }
    Edge e = normalized(
        {static_cast<VertexId>(uv[0]), static_cast<VertexId>(uv[1])});
    if (!dsu.unite(e.u, e.v)) {
      throw ValidationError("line " + std::to_string(edge_line.number) +
                            ": edge {" + std::to_string(e.u) + "," +
                            std::to_string(e.v) +
                            "} creates a cycle (duplicate edge or "
                            "disconnected instance)");
    }
    edges.push_back(e);
  }
  if (pos < lines.size()) {
    throw ParseError("line " + std::to_string(lines[pos].number) +
                     ": unexpected content after " + std::to_string(n - 1) +
                     " edges");
  }

  return ColoredTree::create(n, k, std::move(colors), std::move(edges));
}

ColoredTree parse_instance(std::string_view text) {
  std::istringstream iss{std::string(text)};
  return parse_instance(iss);
}

std::string serialize(const ColoredTree& tree) {
  std::ostringstream out;
  out << "mcs 1\n";
  out << tree.vertex_count() << ' ' << tree.color_count() << '\n';
  for (int v = 1; v <= tree.vertex_count(); ++v) {
    if (v > 1) out << ' ';
    out << tree.color(v);
  }
  out << '\n';
  for (const Edge& e : tree.edges()) {
    out << e.u << ' ' << e.v << '\n';
  }
  return out.str();
}

std::vector<int> bfs_distances(const ColoredTree& tree, VertexId source) {
  std::vector<int> dist(static_cast<size_t>(tree.vertex_count()) + 1, -1);
  std::deque<VertexId> queue{source};
  dist[static_cast<size_t>(source)] = 0;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : tree.neighbors(u)) {
      if (dist[static_cast<size_t>(w)] < 0) {
        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistMatrix::DistMatrix(const ColoredTree& tree) {
  rows_.resize(static_cast<size_t>(tree.vertex_count()) + 1);
  for (VertexId v = 1; v <= tree.vertex_count(); ++v) {
    rows_[static_cast<size_t>(v)] = bfs_distances(tree, v);
  }
}

}  // namespace mcs
