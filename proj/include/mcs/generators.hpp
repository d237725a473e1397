#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcs/colored_tree.hpp"

namespace mcs {

// SplitMix64: state advances by 0x9e3779b97f4a7c15; output mixes with
// (x ^= x>>30) *= 0xbf58476d1ce4e5b9, (x ^= x>>27) *= 0x94d049bb133111eb,
// x ^= x>>31. Fixed here so fixtures reproduce across implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  // Uniform value in [0, bound); bound > 0. Uses multiply-shift reduction.
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

// Order-sensitive seed mixing for deriving per-instance seeds.
std::uint64_t derive_seed(std::uint64_t base,
                          std::initializer_list<std::uint64_t> parts);

enum class TreeFamily { random, path, star, caterpillar, spider, binary };
enum class ColoringScheme { uniform_random, alternating, blocks };

std::string_view family_name(TreeFamily f);
std::string_view coloring_name(ColoringScheme c);
std::optional<TreeFamily> parse_family(std::string_view name);
std::optional<ColoringScheme> parse_coloring(std::string_view name);

struct GenSpec {
  TreeFamily family = TreeFamily::random;
  int n = 1;
  int k = 1;
  std::uint64_t seed = 0;
  ColoringScheme coloring = ColoringScheme::uniform_random;
};

// Deterministic instance generation: equal specs yield identical trees.
// Random trees are drawn uniformly over labeled trees by decoding a random
// Prufer sequence. Throws InvalidSpec on bad parameters (n < 1, k < 1, or
// k > n for the alternating/blocks colorings, which must use every color).
ColoredTree generate(const GenSpec& spec);

// Prufer bijection between labeled trees on n >= 2 vertices and sequences
// of length n-2 over 1..n.
std::vector<Edge> prufer_decode(int n, std::span<const int> seq);
std::vector<int> prufer_encode(int n, std::span<const Edge> edges);

// Visits the edge list of every labeled tree on n vertices exactly once
// (n^(n-2) trees). Throws InstanceTooLarge for n > 7.
void enumerate_labeled_trees(
    int n, const std::function<void(const std::vector<Edge>&)>& visit);

std::uint64_t labeled_tree_count(int n);

}  // namespace mcs
