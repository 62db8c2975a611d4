#include "lrp/descriptor.hpp"

#include <algorithm>
#include <numeric>

#include "projection_rows.hpp"
#include "sort_network.hpp"

namespace lrp {

double LrpDescriptor::total() const { return std::accumulate(bins.begin(), bins.end(), 0.0); }

void normalize_in_place(LrpDescriptor &d) {
  if (d.normalized) return;
  const double sum = d.total();
  if (sum > 0.0)
    for (auto &b : d.bins) b /= sum;
  d.normalized = true;
}

namespace {

// Codes for a whole output row, computed plane-wise so each step is a
// straight loop over the row. Bit order and tie rules match
// binarize_median / binarize_minmax.
class RowCoder {
public:
  explicit RowCoder(std::size_t width) : width_(width), sorted_(width * kProjectionLength), codes_(width) {}

  const std::uint16_t *median(const detail::RowPlanes &planes) {
    const std::size_t w = width_;
    std::copy_n(planes.plane(0), w * kProjectionLength, sorted_.data());
    for (const auto &[i, j] : detail::kSort12Network) {
      std::uint16_t *a = sorted_.data() + static_cast<std::size_t>(i) * w;
      std::uint16_t *b = sorted_.data() + static_cast<std::size_t>(j) * w;
      for (std::size_t c = 0; c < w; ++c) {
        const std::uint16_t lo = std::min(a[c], b[c]);
        const std::uint16_t hi = std::max(a[c], b[c]);
        a[c] = lo;
        b[c] = hi;
      }
    }
    // twice the median, at most 2 * 765
    std::uint16_t *twice = sorted_.data(); // plane 0 is free after the sort
    const std::uint16_t *s5 = sorted_.data() + 5 * w;
    const std::uint16_t *s6 = sorted_.data() + 6 * w;
    for (std::size_t c = 0; c < w; ++c) twice[c] = static_cast<std::uint16_t>(s5[c] + s6[c]);

    std::fill(codes_.begin(), codes_.end(), std::uint16_t{0});
    for (int k = 0; k < kProjectionLength; ++k) {
      const std::uint16_t *p = planes.plane(k);
      for (std::size_t c = 0; c < w; ++c)
        codes_[c] = static_cast<std::uint16_t>((codes_[c] << 1) | (2 * p[c] >= twice[c] ? 1 : 0));
    }
    return codes_.data();
  }

  const std::uint16_t *minmax(const detail::RowPlanes &planes) {
    std::fill(codes_.begin(), codes_.end(), std::uint16_t{0});
    for (int k = 0; k + 1 < kProjectionLength; ++k) {
      const std::uint16_t *p = planes.plane(k);
      const std::uint16_t *q = planes.plane(k + 1);
      for (std::size_t c = 0; c < width_; ++c)
        codes_[c] = static_cast<std::uint16_t>((codes_[c] << 1) | (p[c] >= q[c] ? 1 : 0));
    }
    return codes_.data();
  }

private:
  std::size_t width_;
  std::vector<std::uint16_t> sorted_;
  std::vector<std::uint16_t> codes_;
};

} // namespace

LrpDescriptor descriptor(const GrayImage &image, Method method, bool normalize) {
  require_window_fit(image);
  const std::size_t out_w = image.width() - 2;
  const std::size_t out_h = image.height() - 2;
  const std::size_t nbins = bin_count(method);
  std::vector<std::uint64_t> counts(nbins, 0);

#pragma omp parallel
  {
    detail::RowPlanes planes(out_w);
    std::vector<std::uint64_t> local(nbins, 0);
    RowCoder coder(out_w);

#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t r = 0; r < static_cast<std::ptrdiff_t>(out_h); ++r) {
      detail::project_row(image, static_cast<std::size_t>(r), planes);
      const std::uint16_t *codes = method == Method::Median ? coder.median(planes) : coder.minmax(planes);
      for (std::size_t c = 0; c < out_w; ++c) ++local[codes[c]];
    }

    // Integer merge: order of threads does not affect the result.
#pragma omp critical(lrp_descriptor_merge)
    for (std::size_t b = 0; b < nbins; ++b) counts[b] += local[b];
  }

  LrpDescriptor d;
  d.method = method;
  d.source_dims = image.dims();
  d.bins.assign(counts.begin(), counts.end());
  if (normalize) {
    const double interior = static_cast<double>(out_w * out_h);
    for (auto &b : d.bins) b /= interior;
    d.normalized = true;
  }
  return d;
}

} // namespace lrp
