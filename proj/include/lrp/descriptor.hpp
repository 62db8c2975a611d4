#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "lrp/binarize.hpp"
#include "lrp/gray_image.hpp"

namespace lrp {

/// Code histogram of one image.
///
/// Unnormalized bins hold integer counts (exact in double up to 2^53).
/// Normalized bins sum to one.
struct LrpDescriptor {
  Method method = Method::Median;
  bool normalized = false;
  std::vector<double> bins;
  Dims source_dims{};

  double total() const;
  friend bool operator==(const LrpDescriptor &, const LrpDescriptor &) = default;
};

LrpDescriptor descriptor(const GrayImage &image, Method method, bool normalize);

/// Divides every bin by the bin sum. No-op on an already normalized or
/// empty histogram.
void normalize_in_place(LrpDescriptor &d);

/// Binary record layout, little-endian:
///   "LRP1" | method u8 (0 median, 1 minmax) | normalized u8 | bin count u32 |
///   bins as f64 (normalized) or u64 (counts)
void write_descriptor(std::ostream &out, const LrpDescriptor &d);
LrpDescriptor read_descriptor(std::istream &in);

/// Serialized size of one record in bytes.
std::size_t encoded_size(const LrpDescriptor &d);

} // namespace lrp
