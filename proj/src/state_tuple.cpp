#include "mcs/state_tuple.hpp"

#include <sstream>

namespace mcs {

std::string mask_to_string(ColorMask m, int k) {
  std::string out = "{";
  bool first = true;
  for (Color i = 1; i <= k; ++i) {
    if (!mask_has(m, i)) continue;
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  out += "}";
  return out;
}

std::string to_string(const StateTuple& t) {
  const int k = static_cast<int>(t.slack.size());
  std::ostringstream out;
  out << "(" << to_string(t.dist_to_set) << ", L="
      << mask_to_string(t.nearest_colors, k) << ", H="
      << mask_to_string(t.inconsistent_colors, k) << ", r=[";
  for (int i = 0; i < k; ++i) {
    if (i) out << ",";
    out << to_string(t.slack[static_cast<size_t>(i)]);
  }
  out << "])";
  return out.str();
}

std::optional<std::string> tuple_invariant_violation(const StateTuple& t,
                                                     int k, int n) {
  if (static_cast<int>(t.slack.size()) != k) {
    return "slack vector size " + std::to_string(t.slack.size()) +
           " does not match k=" + std::to_string(k);
  }
  const ColorMask all = k == 32 ? ~ColorMask{0} : (ColorMask{1} << k) - 1;
  if ((t.nearest_colors & ~all) != 0) return "nearest colors outside 1..k";
  if ((t.inconsistent_colors & ~all) != 0) {
    return "inconsistent colors outside 1..k";
  }
  if (t.dist_to_set.is_inf() != (t.nearest_colors == 0)) {
    return "distance is infinite iff no nearest colors";
  }
  for (Color i = 1; i <= k; ++i) {
    const ExtDist r = t.slack[static_cast<size_t>(i) - 1];
    if (t.dist_to_set.is_inf()) {
      const ExtDist expected = mask_has(t.inconsistent_colors, i)
                                   ? ExtDist::infinity()
                                   : ExtDist::finite(0);
      if (r != expected) {
        return "slack of color " + std::to_string(i) +
               " must be " + to_string(expected) + " for an empty subset";
      }
    }
    if (r.is_finite() && r.value() > static_cast<std::uint32_t>(n)) {
      return "finite slack of color " + std::to_string(i) + " exceeds n";
    }
  }
  if (t.dist_to_set.is_finite() &&
      t.dist_to_set.value() > static_cast<std::uint32_t>(n)) {
    return "finite distance exceeds n";
  }
  return std::nullopt;
}

}  // namespace mcs
