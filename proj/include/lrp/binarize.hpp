#pragma once

#include <cstdint>
#include <string_view>

#include "lrp/projection.hpp"

namespace lrp {

enum class Method : std::uint8_t { Median = 0, MinMax = 1 };

constexpr int code_bits(Method m) { return m == Method::Median ? 12 : 11; }
constexpr std::size_t bin_count(Method m) { return std::size_t{1} << code_bits(m); }

std::string_view to_string(Method m);
/// Accepts "median" and "minmax" (case-insensitive).
Method parse_method(std::string_view text);

struct LrpCode {
  Method method = Method::Median;
  std::uint32_t value = 0;

  int bit_width() const { return code_bits(method); }
  friend bool operator==(const LrpCode &, const LrpCode &) = default;
};

/// Bit i (first element in the most significant position) is set iff
/// x(i) >= median. The median of the 12 values is the mean of the 6th and
/// 7th order statistics; the comparison is done on doubled values so it
/// stays in integers.
LrpCode binarize_median(const ProjectionVector &v);

/// Bit i (first pair in the most significant position) is set iff
/// x(i) >= x(i+1). Eleven bits.
LrpCode binarize_minmax(const ProjectionVector &v);

inline LrpCode binarize(const ProjectionVector &v, Method m) {
  return m == Method::Median ? binarize_median(v) : binarize_minmax(v);
}

namespace detail {
/// Sorts 12 values in place with a fixed comparator network.
void sort12(std::array<int, 12> &v);
} // namespace detail

} // namespace lrp
