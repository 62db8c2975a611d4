#include "lrp/binarize.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "lrp/errors.hpp"
#include "sort_network.hpp"

namespace lrp {

std::string_view to_string(Method m) { return m == Method::Median ? "median" : "minmax"; }

Method parse_method(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "median") return Method::Median;
  if (s == "minmax" || s == "min-max") return Method::MinMax;
  throw Error("unknown binarization method '" + std::string(text) + "'");
}

namespace detail {

void sort12(std::array<int, 12> &v) {
  for (const auto &[i, j] : kSort12Network) {
    const int a = v[i], b = v[j];
    v[i] = std::min(a, b);
    v[j] = std::max(a, b);
  }
}

} // namespace detail

LrpCode binarize_median(const ProjectionVector &v) {
  std::array<int, 12> sorted = v;
  detail::sort12(sorted);
  const int twice_median = sorted[5] + sorted[6];
  std::uint32_t code = 0;
  for (int i = 0; i < kProjectionLength; ++i)
    code = (code << 1) | static_cast<std::uint32_t>(2 * v[i] >= twice_median);
  return {Method::Median, code};
}

LrpCode binarize_minmax(const ProjectionVector &v) {
  std::uint32_t code = 0;
  for (int i = 0; i + 1 < kProjectionLength; ++i)
    code = (code << 1) | static_cast<std::uint32_t>(v[i] >= v[i + 1]);
  return {Method::MinMax, code};
}

} // namespace lrp
