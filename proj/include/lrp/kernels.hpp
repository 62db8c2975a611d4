#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace lrp {

/// Projection directions in canonical order.
enum class Direction : std::uint8_t { Deg0 = 0, Deg45 = 1, Deg90 = 2, Deg135 = 3 };

inline constexpr std::array<Direction, 4> kDirections = {Direction::Deg0, Direction::Deg45,
                                                         Direction::Deg90, Direction::Deg135};
inline constexpr int kBinsPerDirection = 3;
inline constexpr int kProjectionLength = 12;

constexpr int angle_degrees(Direction d) { return 45 * static_cast<int>(d); }
std::string_view to_string(Direction d);

/// A 3x3 binary summation mask producing one bin of one local projection.
///
/// Weights are indexed [row][col] and applied window-aligned: weight (i, j)
/// multiplies the pixel at offset (i - 1, j - 1) from the window center.
struct RadonKernel {
  Direction direction = Direction::Deg0;
  int bin = 0;
  std::array<std::array<std::uint8_t, 3>, 3> weights{};

  int weight_sum() const;
};

/// The 12 kernels, direction-major then bin-minor.
///
///   0 deg   : rows top to bottom
///   45 deg  : anti-diagonals row+col = 1, 2, 3
///   90 deg  : columns left to right
///   135 deg : diagonals col-row = +1, 0, -1
///
/// The single-pixel corner lines of the diagonal directions are not covered.
const std::array<RadonKernel, 12> &kernel_bank();

} // namespace lrp
