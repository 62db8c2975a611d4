#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string_view>

#include "lrp/gray_image.hpp"

namespace lrp {

/// Target dimensions, or native size when empty. Interpolation is always
/// bilinear with half-pixel centers.
struct ResizePolicy {
  std::optional<Dims> target;

  static ResizePolicy native() { return {}; }
  static ResizePolicy to(std::size_t w, std::size_t h) { return {Dims{w, h}}; }
};

/// Parses "native" or "WxH".
ResizePolicy parse_resize(std::string_view text);

/// BT.601 luma with integer half-up rounding: (299 R + 587 G + 114 B + 500) / 1000.
std::uint8_t luma(std::uint8_t r, std::uint8_t g, std::uint8_t b);

/// Bilinear resize in exact rational arithmetic, rounding half up.
/// Resizing to the current dimensions returns the input unchanged.
GrayImage resize_bilinear(const GrayImage &image, Dims target);

/// Decodes PNG, TIFF, JPEG or BMP into 8-bit gray and applies the policy.
/// Throws FileNotFound, DecodeError or TooSmallAfterResize.
GrayImage load_gray(const std::filesystem::path &path, const ResizePolicy &policy);

/// Writes an 8-bit gray image; format follows the extension.
void save_gray(const std::filesystem::path &path, const GrayImage &image);

bool is_image_file(const std::filesystem::path &path);

} // namespace lrp
