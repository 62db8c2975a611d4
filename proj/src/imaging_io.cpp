#include "lrp/imaging_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

namespace lrp {

namespace {

std::size_t parse_dim(std::string_view s, std::string_view whole) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) throw Error("bad resize '" + std::string(whole) + "'");
  return v;
}

// Source sample position for one destination index along an axis, as an
// integer base index plus a fraction frac/den with den = 2 * dst.
struct AxisSample {
  std::size_t i0;
  std::size_t i1;
  std::int64_t frac;
};

std::vector<AxisSample> axis_samples(std::size_t src, std::size_t dst) {
  std::vector<AxisSample> out(dst);
  const auto s = static_cast<std::int64_t>(src);
  const auto d = static_cast<std::int64_t>(dst);
  const std::int64_t den = 2 * d;
  for (std::int64_t j = 0; j < d; ++j) {
    const std::int64_t num = (2 * j + 1) * s - d;
    std::int64_t i0 = 0, frac = 0;
    if (num > 0) {
      i0 = num / den;
      frac = num % den;
    }
    if (i0 >= s - 1) {
      i0 = s - 1;
      frac = 0;
    }
    out[static_cast<std::size_t>(j)] = {static_cast<std::size_t>(i0), static_cast<std::size_t>(std::min(i0 + 1, s - 1)),
                                        frac};
  }
  return out;
}

} // namespace

ResizePolicy parse_resize(std::string_view text) {
  if (text == "native") return ResizePolicy::native();
  const auto x = text.find_first_of("xX");
  if (x == std::string_view::npos) throw Error("bad resize '" + std::string(text) + "' (expected WxH or native)");
  const auto w = parse_dim(text.substr(0, x), text);
  const auto h = parse_dim(text.substr(x + 1), text);
  if (w < 3 || h < 3) throw Error("resize target must be at least 3x3");
  return ResizePolicy::to(w, h);
}

std::uint8_t luma(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  return static_cast<std::uint8_t>((299u * r + 587u * g + 114u * b + 500u) / 1000u);
}

GrayImage resize_bilinear(const GrayImage &image, Dims target) {
  if (target.width == 0 || target.height == 0) throw Error("resize target must be non-empty");
  if (image.dims() == target) return image;
  if (image.empty()) throw Error("cannot resize an empty image");

  const auto xs = axis_samples(image.width(), target.width);
  const auto ys = axis_samples(image.height(), target.height);
  const std::int64_t dx = 2 * static_cast<std::int64_t>(target.width);
  const std::int64_t dy = 2 * static_cast<std::int64_t>(target.height);
  const std::int64_t den = dx * dy;

  GrayImage out(target.width, target.height);
  for (std::size_t r = 0; r < target.height; ++r) {
    const auto &y = ys[r];
    for (std::size_t c = 0; c < target.width; ++c) {
      const auto &x = xs[c];
      const std::int64_t v = image(y.i0, x.i0) * (dx - x.frac) * (dy - y.frac) + image(y.i0, x.i1) * x.frac * (dy - y.frac) +
                             image(y.i1, x.i0) * (dx - x.frac) * y.frac + image(y.i1, x.i1) * x.frac * y.frac;
      out(r, c) = static_cast<std::uint8_t>((v + den / 2) / den);
    }
  }
  return out;
}

GrayImage load_gray(const std::filesystem::path &path, const ResizePolicy &policy) {
  if (!std::filesystem::is_regular_file(path)) throw FileNotFound("no such file: " + path.string());
  const cv::Mat raw = cv::imread(path.string(), cv::IMREAD_UNCHANGED);
  if (raw.empty()) throw DecodeError("cannot decode image: " + path.string());

  cv::Mat src = raw;
  if (src.depth() == CV_16U) {
    cv::Mat scaled;
    src.convertTo(scaled, CV_8U, 255.0 / 65535.0);
    src = scaled;
  } else if (src.depth() != CV_8U) {
    throw DecodeError("unsupported sample depth in " + path.string() + " (expected 8 or 16 bit)");
  }

  const int channels = src.channels();
  GrayImage gray(static_cast<std::size_t>(src.cols), static_cast<std::size_t>(src.rows));
  for (int r = 0; r < src.rows; ++r) {
    const std::uint8_t *p = src.ptr<std::uint8_t>(r);
    for (int c = 0; c < src.cols; ++c) {
      const std::uint8_t *px = p + static_cast<std::ptrdiff_t>(c) * channels;
      switch (channels) {
      case 1:
      case 2: // gray + alpha
        gray(r, c) = px[0];
        break;
      case 3:
      case 4: // OpenCV channel order is BGR(A)
        gray(r, c) = luma(px[2], px[1], px[0]);
        break;
      default:
        throw DecodeError("unsupported color layout with " + std::to_string(channels) + " channels in " +
                          path.string());
      }
    }
  }

  if (policy.target) gray = resize_bilinear(gray, *policy.target);
  if (gray.width() < 3 || gray.height() < 3)
    throw TooSmallAfterResize(path.string() + " is smaller than 3x3 after resizing");
  return gray;
}

void save_gray(const std::filesystem::path &path, const GrayImage &image) {
  const cv::Mat m(static_cast<int>(image.height()), static_cast<int>(image.width()), CV_8UC1,
                  const_cast<std::uint8_t *>(image.pixels().data()));
  if (!cv::imwrite(path.string(), m)) throw Error("cannot write image " + path.string());
}

bool is_image_file(const std::filesystem::path &path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == ".png" || ext == ".tif" || ext == ".tiff" || ext == ".jpg" || ext == ".jpeg" || ext == ".bmp";
}

} // namespace lrp
