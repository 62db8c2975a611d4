#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "lrp/gray_image.hpp"
#include "lrp/kernels.hpp"

namespace lrp {

/// The 12 local Radon sums at one pixel, ordered as kernel_bank().
using ProjectionVector = std::array<int, kProjectionLength>;

/// Projection vectors over the valid interior of an image.
/// Entry (r, c) belongs to the window centered at pixel (r + 1, c + 1).
class ProjectionGrid {
public:
  ProjectionGrid(std::size_t width, std::size_t height)
      : width_(width), height_(height), cells_(width * height) {}

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }

  const ProjectionVector &operator()(std::size_t r, std::size_t c) const { return cells_[r * width_ + c]; }
  ProjectionVector &operator()(std::size_t r, std::size_t c) { return cells_[r * width_ + c]; }

  friend bool operator==(const ProjectionGrid &, const ProjectionGrid &) = default;

private:
  std::size_t width_;
  std::size_t height_;
  std::vector<ProjectionVector> cells_;
};

/// Convolves the image with the kernel bank over the valid region.
/// Rows are distributed over OpenMP threads; the result does not depend on
/// the thread count.
ProjectionGrid local_projections(const GrayImage &image);

} // namespace lrp
