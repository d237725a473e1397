#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

namespace mcs {

// Extended nonnegative integer: a finite value or a distinguished infinity.
// Increment saturates at infinity and subtraction never goes below zero
// (monus). Infinity compares greater than every finite value.
class ExtDist {
 public:
  constexpr ExtDist() = default;

  static constexpr ExtDist finite(std::uint32_t v) { return ExtDist(v); }
  static constexpr ExtDist infinity() { return ExtDist(kInfRaw); }

  constexpr bool is_inf() const { return raw_ == kInfRaw; }
  constexpr bool is_finite() const { return raw_ != kInfRaw; }

  // Finite value; only meaningful when is_finite().
  constexpr std::uint32_t value() const { return raw_; }

  // Raw encoding (infinity maps to the max raw value, so raw comparison
  // agrees with the extended order).
  constexpr std::uint32_t raw() const { return raw_; }

  constexpr ExtDist plus_one() const {
    return is_inf() ? *this : ExtDist(raw_ + 1);
  }

  constexpr ExtDist monus_one() const {
    if (is_inf()) return *this;
    return ExtDist(raw_ == 0 ? 0 : raw_ - 1);
  }

  friend constexpr bool operator==(ExtDist, ExtDist) = default;
  friend constexpr std::strong_ordering operator<=>(ExtDist a, ExtDist b) {
    return a.raw_ <=> b.raw_;
  }

  friend constexpr ExtDist min(ExtDist a, ExtDist b) { return a <= b ? a : b; }
  friend constexpr ExtDist max(ExtDist a, ExtDist b) { return a >= b ? a : b; }

 private:
  static constexpr std::uint32_t kInfRaw =
      std::numeric_limits<std::uint32_t>::max();

  constexpr explicit ExtDist(std::uint32_t raw) : raw_(raw) {}

  std::uint32_t raw_ = 0;
};

inline std::string to_string(ExtDist d) {
  return d.is_inf() ? "inf" : std::to_string(d.value());
}

}  // namespace mcs
