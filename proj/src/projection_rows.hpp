#pragma once

// Row-at-a-time convolution shared by local_projections and descriptor.

#include <cstdint>
#include <vector>

#include "lrp/gray_image.hpp"
#include "lrp/kernels.hpp"

namespace lrp::detail {

struct Tap {
  int row;
  int col;
};

/// Nonzero cells of each kernel in kernel_bank() order.
struct KernelTaps {
  struct Entry {
    Tap cells[3];
    int count;
  };
  Entry taps[kProjectionLength];
  KernelTaps();
};

const KernelTaps &kernel_taps();

/// Twelve projection planes for one output row. Values never exceed 765.
class RowPlanes {
public:
  explicit RowPlanes(std::size_t width) : width_(width), data_(width * kProjectionLength) {}
  std::uint16_t *plane(int k) { return data_.data() + static_cast<std::size_t>(k) * width_; }
  const std::uint16_t *plane(int k) const { return data_.data() + static_cast<std::size_t>(k) * width_; }

private:
  std::size_t width_;
  std::vector<std::uint16_t> data_;
};

void project_row(const GrayImage &image, std::size_t out_row, RowPlanes &planes);

} // namespace lrp::detail
