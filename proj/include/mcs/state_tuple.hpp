#pragma once

#include <boost/container/small_vector.hpp>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "mcs/colored_tree.hpp"
#include "mcs/ext_dist.hpp"

namespace mcs {

// Bitmask over color ids; color i occupies bit i-1. Limits tuple-based
// machinery to k <= 32 colors (the DP is unusable long before that).
using ColorMask = std::uint32_t;
inline constexpr int kMaxTupleColors = 32;

constexpr bool mask_has(ColorMask m, Color i) {
  return (m >> (i - 1)) & 1u;
}

constexpr ColorMask mask_bit(Color i) { return ColorMask{1} << (i - 1); }

std::string mask_to_string(ColorMask m, int k);

using SlackVec = boost::container::small_vector<ExtDist, 8>;

// Admissibility signature of a vertex subset S within a rooted subtree with
// reference vertex v:
//   - dist_to_set: distance from v to S (infinity when S is empty);
//   - nearest_colors: colors appearing among the nearest neighbors of v;
//   - inconsistent_colors: colors with at least one inconsistent vertex in
//     the subtree (a color absent from the subtree counts as consistent);
//   - slack[i-1]: per-color distance summary relative to v, clamped at 0 --
//     for inconsistent colors the minimum over inconsistent vertices w of
//     dist(w,S) - dist(w,v) (how far outside the subtree a rescuing vertex
//     may sit), for consistent colors the maximum of the same quantity over
//     all vertices of that color (how close a wrong-colored intruder may
//     come).
struct StateTuple {
  ExtDist dist_to_set;
  ColorMask nearest_colors = 0;
  ColorMask inconsistent_colors = 0;
  SlackVec slack;

  bool operator==(const StateTuple&) const = default;
};

struct StateTupleHash {
  std::size_t operator()(const StateTuple& t) const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
      h ^= x;
      h *= 1099511628211ull;
    };
    mix(t.dist_to_set.raw());
    mix(t.nearest_colors);
    mix(t.inconsistent_colors);
    for (ExtDist s : t.slack) mix(s.raw());
    h ^= h >> 29;
    h *= 0xbf58476d1ce4e5b9ull;
    h ^= h >> 32;
    return static_cast<std::size_t>(h);
  }
};

std::string to_string(const StateTuple& t);

// Checks the structural tuple invariants for a k-colored, n-vertex scope:
// slack size k; dist_to_set == infinity iff nearest_colors empty; when
// infinite, slack is infinity exactly on inconsistent colors and 0
// elsewhere; finite slacks lie in 0..n. Returns a description of the first
// violation, or nullopt.
std::optional<std::string> tuple_invariant_violation(const StateTuple& t,
                                                     int k, int n);

}  // namespace mcs
