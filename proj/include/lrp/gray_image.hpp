#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lrp/errors.hpp"

namespace lrp {

struct Dims {
  std::size_t width = 0;
  std::size_t height = 0;
  friend bool operator==(const Dims &, const Dims &) = default;
};

/// Single-channel 8-bit image stored row-major.
class GrayImage {
public:
  GrayImage() = default;

  GrayImage(std::size_t width, std::size_t height, std::uint8_t fill = 0)
      : width_(width), height_(height), data_(width * height, fill) {}

  GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> data)
      : width_(width), height_(height), data_(std::move(data)) {
    if (data_.size() != width_ * height_)
      throw LengthMismatch("GrayImage: data length does not match width*height");
  }

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  Dims dims() const { return {width_, height_}; }
  bool empty() const { return data_.empty(); }

  std::uint8_t operator()(std::size_t row, std::size_t col) const { return data_[row * width_ + col]; }
  std::uint8_t &operator()(std::size_t row, std::size_t col) { return data_[row * width_ + col]; }

  std::span<const std::uint8_t> row(std::size_t r) const { return {data_.data() + r * width_, width_}; }
  std::span<const std::uint8_t> pixels() const { return data_; }
  std::span<std::uint8_t> pixels() { return data_; }

  friend bool operator==(const GrayImage &, const GrayImage &) = default;

private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<std::uint8_t> data_;
};

/// Throws ImageTooSmall unless both dimensions are at least 3.
inline void require_window_fit(const GrayImage &image) {
  if (image.width() < 3 || image.height() < 3)
    throw ImageTooSmall("image must be at least 3x3 for local Radon projections");
}

} // namespace lrp
