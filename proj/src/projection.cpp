#include "lrp/projection.hpp"

#include "projection_rows.hpp"

namespace lrp {

namespace detail {

KernelTaps::KernelTaps() {
  const auto &bank = kernel_bank();
  for (std::size_t k = 0; k < bank.size(); ++k) {
    auto &t = taps[k];
    t.count = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (bank[k].weights[i][j] != 0) t.cells[t.count++] = {i, j};
  }
}

const KernelTaps &kernel_taps() {
  static const KernelTaps taps;
  return taps;
}

void project_row(const GrayImage &image, std::size_t out_row, RowPlanes &planes) {
  const std::size_t out_w = image.width() - 2;
  const std::uint8_t *rows[3] = {image.row(out_row).data(), image.row(out_row + 1).data(),
                                 image.row(out_row + 2).data()};
  const auto &taps = kernel_taps();
  for (int k = 0; k < kProjectionLength; ++k) {
    std::uint16_t *dst = planes.plane(k);
    const auto &t = taps.taps[k];
    {
      const std::uint8_t *src = rows[t.cells[0].row] + t.cells[0].col;
      for (std::size_t c = 0; c < out_w; ++c) dst[c] = src[c];
    }
    for (int n = 1; n < t.count; ++n) {
      const std::uint8_t *src = rows[t.cells[n].row] + t.cells[n].col;
      for (std::size_t c = 0; c < out_w; ++c) dst[c] = static_cast<std::uint16_t>(dst[c] + src[c]);
    }
  }
}

} // namespace detail

ProjectionGrid local_projections(const GrayImage &image) {
  require_window_fit(image);
  const std::size_t out_w = image.width() - 2;
  const std::size_t out_h = image.height() - 2;
  ProjectionGrid grid(out_w, out_h);

#pragma omp parallel
  {
    detail::RowPlanes planes(out_w);
#pragma omp for schedule(static)
    for (std::ptrdiff_t r = 0; r < static_cast<std::ptrdiff_t>(out_h); ++r) {
      detail::project_row(image, static_cast<std::size_t>(r), planes);
      for (std::size_t c = 0; c < out_w; ++c) {
        auto &cell = grid(static_cast<std::size_t>(r), c);
        for (int k = 0; k < kProjectionLength; ++k) cell[k] = planes.plane(k)[c];
      }
    }
  }
  return grid;
}

} // namespace lrp
