#include "lrp/oracle.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

namespace lrp::oracle {

namespace {

// Which projection line of direction d passes through cell (r, c), if any.
// Lines that cover a single corner cell are dropped.
std::optional<int> line_of(Direction d, int r, int c) {
  switch (d) {
  case Direction::Deg0:
    return r;
  case Direction::Deg90:
    return c;
  case Direction::Deg45: {
    const int s = r + c;
    if (s == 0 || s == 4) return std::nullopt;
    return s - 1;
  }
  case Direction::Deg135: {
    const int t = c - r;
    if (t == 2 || t == -2) return std::nullopt;
    return 1 - t;
  }
  }
  return std::nullopt;
}

} // namespace

Window3 window_at(const GrayImage &image, std::size_t row, std::size_t col) {
  Window3 w{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) w[i][j] = image(row - 1 + i, col - 1 + j);
  return w;
}

std::array<int, 3> window_projection(const Window3 &w, Direction d) {
  std::array<int, 3> sums{0, 0, 0};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      if (auto line = line_of(d, r, c)) sums[*line] += w[r][c];
  return sums;
}

ProjectionVector window_vector(const Window3 &w) {
  ProjectionVector v{};
  for (int di = 0; di < 4; ++di) {
    const auto p = window_projection(w, static_cast<Direction>(di));
    for (int b = 0; b < 3; ++b) v[di * 3 + b] = p[b];
  }
  return v;
}

ProjectionGrid reference_projections(const GrayImage &image) {
  require_window_fit(image);
  ProjectionGrid grid(image.width() - 2, image.height() - 2);
  for (std::size_t r = 1; r + 1 < image.height(); ++r)
    for (std::size_t c = 1; c + 1 < image.width(); ++c) grid(r - 1, c - 1) = window_vector(window_at(image, r, c));
  return grid;
}

std::uint32_t reference_median_code(const ProjectionVector &v) {
  std::vector<int> sorted(v.begin(), v.end());
  std::sort(sorted.begin(), sorted.end());
  const double median = (sorted[5] + sorted[6]) / 2.0;
  std::uint32_t code = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] >= median) code |= 1u << (v.size() - 1 - i);
  return code;
}

std::uint32_t reference_minmax_code(const ProjectionVector &v) {
  std::uint32_t code = 0;
  const std::size_t n = v.size() - 1;
  for (std::size_t i = 0; i < n; ++i)
    if (v[i] >= v[i + 1]) code |= 1u << (n - 1 - i);
  return code;
}

LrpDescriptor reference_descriptor(const GrayImage &image, Method method, bool normalize) {
  const ProjectionGrid grid = reference_projections(image);
  LrpDescriptor d;
  d.method = method;
  d.source_dims = image.dims();
  d.bins.assign(method == Method::Median ? 4096 : 2048, 0.0);
  for (std::size_t r = 0; r < grid.height(); ++r)
    for (std::size_t c = 0; c < grid.width(); ++c) {
      const auto code = method == Method::Median ? reference_median_code(grid(r, c)) : reference_minmax_code(grid(r, c));
      d.bins[code] += 1.0;
    }
  if (normalize) {
    const double interior = static_cast<double>(grid.width() * grid.height());
    for (auto &b : d.bins) b /= interior;
    d.normalized = true;
  }
  return d;
}

EquivalenceReport check_equivalence(std::uint64_t seed, std::size_t trials, std::size_t min_side,
                                    std::size_t max_side, bool inject_fault) {
  std::mt19937_64 rng(seed);
  EquivalenceReport report;
  report.trials = trials;
  const std::size_t span = max_side - min_side + 1;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t w = min_side + rng() % span;
    const std::size_t h = min_side + rng() % span;
    GrayImage img(w, h);
    for (auto &p : img.pixels()) p = static_cast<std::uint8_t>(rng() & 0xff);

    ProjectionGrid fast = local_projections(img);
    if (inject_fault && t == 0) fast(0, 0)[rng() % kProjectionLength] += 1;

    std::string what;
    if (!(fast == reference_projections(img))) what = "projection grid";
    else if (!(descriptor(img, Method::Median, false) == reference_descriptor(img, Method::Median, false)))
      what = "median descriptor";
    else if (!(descriptor(img, Method::MinMax, false) == reference_descriptor(img, Method::MinMax, false)))
      what = "minmax descriptor";

    if (!what.empty()) {
      if (report.mismatches++ == 0)
        report.first_failure = "trial " + std::to_string(t) + " (" + std::to_string(w) + "x" + std::to_string(h) +
                               "): " + what + " differs";
    }
  }
  return report;
}

} // namespace lrp::oracle
