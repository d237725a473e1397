#include "mcs/generators.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

#include "mcs/errors.hpp"

namespace mcs {

std::uint64_t SplitMix64::next() {
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  assert(bound > 0);
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(next()) * bound) >> 64);
}

std::uint64_t derive_seed(std::uint64_t base,
                          std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = base;
  for (std::uint64_t p : parts) {
    SplitMix64 g(h ^ (p + 0x9e3779b97f4a7c15ull));
    h = g.next();
  }
  return h;
}

std::string_view family_name(TreeFamily f) {
  switch (f) {
    case TreeFamily::random: return "random";
    case TreeFamily::path: return "path";
    case TreeFamily::star: return "star";
    case TreeFamily::caterpillar: return "caterpillar";
    case TreeFamily::spider: return "spider";
    case TreeFamily::binary: return "binary";
  }
  return "?";
}

std::string_view coloring_name(ColoringScheme c) {
  switch (c) {
    case ColoringScheme::uniform_random: return "uniform-random";
    case ColoringScheme::alternating: return "alternating";
    case ColoringScheme::blocks: return "blocks";
  }
  return "?";
}

std::optional<TreeFamily> parse_family(std::string_view name) {
  for (TreeFamily f : {TreeFamily::random, TreeFamily::path, TreeFamily::star,
                       TreeFamily::caterpillar, TreeFamily::spider,
                       TreeFamily::binary}) {
    if (name == family_name(f)) return f;
  }
  return std::nullopt;
}

std::optional<ColoringScheme> parse_coloring(std::string_view name) {
  for (ColoringScheme c :
       {ColoringScheme::uniform_random, ColoringScheme::alternating,
        ColoringScheme::blocks}) {
    if (name == coloring_name(c)) return c;
  }
  return std::nullopt;
}

namespace {

std::vector<Edge> family_edges(const GenSpec& spec, SplitMix64& rng) {
  const int n = spec.n;
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(n) - 1);
  switch (spec.family) {
    case TreeFamily::random: {
      if (n <= 2) {
        if (n == 2) edges.push_back({1, 2});
        break;
      }
      std::vector<int> seq(static_cast<size_t>(n) - 2);
      for (int& a : seq) {
        a = static_cast<int>(1 + rng.next_below(static_cast<std::uint64_t>(n)));
      }
      edges = prufer_decode(n, seq);
      break;
    }
    case TreeFamily::path:
      for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
      break;
    case TreeFamily::star:
      for (int i = 2; i <= n; ++i) edges.push_back({1, i});
      break;
    case TreeFamily::caterpillar: {
      // Spine 1..s; remaining vertices hang off the spine round-robin.
      const int s = (n + 1) / 2;
      for (int i = 1; i < s; ++i) edges.push_back({i, i + 1});
      for (int j = 1; j + s <= n; ++j) {
        edges.push_back({(j - 1) % s + 1, s + j});
      }
      break;
    }
    case TreeFamily::spider: {
      // Up to three legs of near-equal length chained off the center.
      const int legs = std::min(3, n - 1);
      int next_id = 2;
      for (int leg = 0; leg < legs; ++leg) {
        const int len = (n - 1) / legs + (leg < (n - 1) % legs ? 1 : 0);
        VertexId prev = 1;
        for (int step = 0; step < len; ++step) {
          edges.push_back({prev, next_id});
          prev = next_id++;
        }
      }
      break;
    }
    case TreeFamily::binary:
      for (int i = 2; i <= n; ++i) edges.push_back({i / 2, i});
      break;
  }
  return edges;
}

std::vector<Color> family_colors(const GenSpec& spec, SplitMix64& rng) {
  const int n = spec.n;
  const int k = spec.k;
  std::vector<Color> colors(static_cast<size_t>(n), 1);
  switch (spec.coloring) {
    case ColoringScheme::uniform_random:
      for (Color& c : colors) {
        c = static_cast<Color>(1 + rng.next_below(static_cast<std::uint64_t>(k)));
      }
      break;
    case ColoringScheme::alternating:
      for (int i = 0; i < n; ++i) {
        colors[static_cast<size_t>(i)] = i % k + 1;
      }
      break;
    case ColoringScheme::blocks: {
      const bool hub_family = spec.family == TreeFamily::star ||
                              spec.family == TreeFamily::spider;
      if (hub_family && k >= 2) {
        // Hub keeps color 1; the rest split into balanced blocks of 2..k.
        colors[0] = 1;
        const int m = n - 1;
        const int b = k - 1;
        int pos = 1;
        for (int block = 0; block < b; ++block) {
          const int len = m / b + (block < m % b ? 1 : 0);
          for (int step = 0; step < len; ++step) {
            colors[static_cast<size_t>(pos++)] = block + 2;
          }
        }
      } else {
        int pos = 0;
        for (int block = 0; block < k; ++block) {
          const int len = n / k + (block < n % k ? 1 : 0);
          for (int step = 0; step < len; ++step) {
            colors[static_cast<size_t>(pos++)] = block + 1;
          }
        }
      }
      break;
    }
  }
  return colors;
}

}  // namespace

ColoredTree generate(const GenSpec& spec) {
  if (spec.n < 1) throw InvalidSpec("n must be at least 1");
  if (spec.k < 1) throw InvalidSpec("k must be at least 1");
  if (spec.coloring != ColoringScheme::uniform_random && spec.k > spec.n) {
    throw InvalidSpec("coloring '" + std::string(coloring_name(spec.coloring)) +
                      "' needs every color to appear, so k <= n is required");
  }

  SplitMix64 rng(spec.seed);
  std::vector<Edge> edges = family_edges(spec, rng);
  std::vector<Color> colors = family_colors(spec, rng);
  return ColoredTree::create(spec.n, spec.k, std::move(colors),
                             std::move(edges));
}

std::vector<Edge> prufer_decode(int n, std::span<const int> seq) {
  assert(n >= 1);
  assert(static_cast<int>(seq.size()) == std::max(0, n - 2));
  std::vector<Edge> edges;
  if (n == 1) return edges;
  edges.reserve(static_cast<size_t>(n) - 1);

  std::vector<int> deg(static_cast<size_t>(n) + 1, 1);
  for (int a : seq) ++deg[static_cast<size_t>(a)];

  int ptr = 1;
  while (deg[static_cast<size_t>(ptr)] != 1) ++ptr;
  int leaf = ptr;
  for (int a : seq) {
    edges.push_back({leaf, a});
    if (--deg[static_cast<size_t>(a)] == 1 && a < ptr) {
      leaf = a;
    } else {
      ++ptr;
      while (deg[static_cast<size_t>(ptr)] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.push_back({leaf, n});
  return edges;
}

std::vector<int> prufer_encode(int n, std::span<const Edge> edges) {
  assert(static_cast<int>(edges.size()) == std::max(0, n - 1));
  std::vector<int> code;
  if (n <= 2) return code;
  code.reserve(static_cast<size_t>(n) - 2);

  std::vector<std::vector<int>> adj(static_cast<size_t>(n) + 1);
  std::vector<int> deg(static_cast<size_t>(n) + 1, 0);
  for (const Edge& e : edges) {
    adj[static_cast<size_t>(e.u)].push_back(e.v);
    adj[static_cast<size_t>(e.v)].push_back(e.u);
    ++deg[static_cast<size_t>(e.u)];
    ++deg[static_cast<size_t>(e.v)];
  }

  // Parents oriented toward vertex n, which is never consumed.
  std::vector<int> parent(static_cast<size_t>(n) + 1, 0);
  std::deque<int> queue{n};
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  seen[static_cast<size_t>(n)] = true;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : adj[static_cast<size_t>(u)]) {
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = true;
        parent[static_cast<size_t>(w)] = u;
        queue.push_back(w);
      }
    }
  }

  int ptr = 1;
  while (deg[static_cast<size_t>(ptr)] != 1 || ptr == n) ++ptr;
  int leaf = ptr;
  for (int i = 0; i < n - 2; ++i) {
    const int next = parent[static_cast<size_t>(leaf)];
    code.push_back(next);
    if (--deg[static_cast<size_t>(next)] == 1 && next < ptr && next != n) {
      leaf = next;
    } else {
      ++ptr;
      while (deg[static_cast<size_t>(ptr)] != 1 || ptr == n) ++ptr;
      leaf = ptr;
    }
  }
  return code;
}

void enumerate_labeled_trees(
    int n, const std::function<void(const std::vector<Edge>&)>& visit) {
  if (n > 7) {
    throw InstanceTooLarge(
        "labeled tree enumeration grows as n^(n-2); n is capped at 7");
  }
  if (n < 1) throw InvalidSpec("n must be at least 1");
  if (n <= 2) {
    std::vector<Edge> edges;
    if (n == 2) edges.push_back({1, 2});
    visit(edges);
    return;
  }
  std::vector<int> seq(static_cast<size_t>(n) - 2, 1);
  while (true) {
    visit(prufer_decode(n, seq));
    // Odometer over 1..n per position.
    int pos = static_cast<int>(seq.size()) - 1;
    while (pos >= 0 && seq[static_cast<size_t>(pos)] == n) {
      seq[static_cast<size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++seq[static_cast<size_t>(pos)];
  }
}

std::uint64_t labeled_tree_count(int n) {
  if (n <= 2) return 1;
  std::uint64_t count = 1;
  for (int i = 0; i < n - 2; ++i) count *= static_cast<std::uint64_t>(n);
  return count;
}

}  // namespace mcs
