#include "doctest.h"

#include <omp.h>

#include <sstream>

#include "lrp/descriptor.hpp"
#include "lrp/oracle.hpp"
#include "test_util.hpp"

using namespace lrp;

namespace {

std::size_t nonzero(const LrpDescriptor &d) {
  return static_cast<std::size_t>(std::count_if(d.bins.begin(), d.bins.end(), [](double b) { return b != 0.0; }));
}

} // namespace

TEST_CASE("constant images") {
  SUBCASE("zero image") {
    const GrayImage img(10, 10, 0);
    const auto med = descriptor(img, Method::Median, false);
    CHECK(med.bins.size() == 4096);
    CHECK(med.bins[4095] == 64);
    CHECK(nonzero(med) == 1);
    const auto mm = descriptor(img, Method::MinMax, false);
    CHECK(mm.bins.size() == 2048);
    CHECK(mm.bins[2047] == 64);
    CHECK(nonzero(mm) == 1);
  }
  SUBCASE("nonzero constant") {
    // Vector [3c,3c,3c,2c,3c,2c,3c,3c,3c,2c,3c,2c]: median is 3c, so the 2c
    // entries fall below it. Min-Max pairs give 11101011101.
    const GrayImage img(10, 10, 77);
    const auto med = descriptor(img, Method::Median, false);
    CHECK(med.bins[0b111010111010] == 64);
    CHECK(med.bins[3770] == 64);
    CHECK(nonzero(med) == 1);
    const auto mm = descriptor(img, Method::MinMax, false);
    CHECK(mm.bins[0b11101011101] == 64);
    CHECK(mm.bins[1885] == 64);
    CHECK(nonzero(mm) == 1);
  }
}

TEST_CASE("bin sum equals interior pixel count") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 50; ++i) {
    const auto w = 3 + rng() % 70, h = 3 + rng() % 70;
    const auto img = test::random_image(rng, w, h);
    for (auto m : {Method::Median, Method::MinMax}) {
      const auto d = descriptor(img, m, false);
      CHECK(d.total() == static_cast<double>((w - 2) * (h - 2)));
      CHECK(!d.normalized);
      CHECK(d.source_dims == Dims{w, h});
    }
  }
}

TEST_CASE("1000x1000 interior count") {
  std::mt19937_64 rng(22);
  const auto img = test::random_image(rng, 1000, 1000);
  CHECK(descriptor(img, Method::Median, false).total() == 996004.0);
}

TEST_CASE("normalized histograms sum to one") {
  std::mt19937_64 rng(23);
  const auto img = test::random_image(rng, 40, 31);
  for (auto m : {Method::Median, Method::MinMax}) {
    const auto d = descriptor(img, m, true);
    CHECK(d.normalized);
    CHECK(d.total() == doctest::Approx(1.0).epsilon(1e-9));

    auto counts = descriptor(img, m, false);
    normalize_in_place(counts);
    CHECK(counts == d);
  }
}

TEST_CASE("descriptor is independent of thread count") {
  std::mt19937_64 rng(24);
  const auto img = test::random_image(rng, 301, 203);
  const int saved = omp_get_max_threads();
  for (auto m : {Method::Median, Method::MinMax}) {
    omp_set_num_threads(1);
    const auto a = descriptor(img, m, true);
    omp_set_num_threads(3);
    const auto b = descriptor(img, m, true);
    omp_set_num_threads(8);
    const auto c = descriptor(img, m, true);
    CHECK(a == b);
    CHECK(a == c);
  }
  omp_set_num_threads(saved);
}

TEST_CASE("too small") {
  CHECK_THROWS_AS(descriptor(GrayImage(2, 2), Method::Median, true), ImageTooSmall);
}

TEST_CASE("binary record round trip") {
  std::mt19937_64 rng(25);
  for (int i = 0; i < 20; ++i) {
    const auto img = test::random_image(rng, 3 + rng() % 30, 3 + rng() % 30);
    const auto m = i % 2 ? Method::MinMax : Method::Median;
    auto d = descriptor(img, m, i % 4 < 2);
    std::stringstream buf;
    write_descriptor(buf, d);
    CHECK(buf.str().size() == encoded_size(d));
    auto back = read_descriptor(buf);
    d.source_dims = {};
    CHECK(back == d);
  }
}

TEST_CASE("binary record layout") {
  LrpDescriptor d;
  d.method = Method::MinMax;
  d.bins.assign(2048, 0.0);
  d.bins[5] = 3;
  std::stringstream buf;
  write_descriptor(buf, d);
  const std::string s = buf.str();
  REQUIRE(s.size() == 10 + 8 * 2048);
  CHECK(s.substr(0, 4) == "LRP1");
  CHECK(s[4] == 1);
  CHECK(s[5] == 0);
  CHECK(static_cast<unsigned char>(s[6]) == 0x00);
  CHECK(static_cast<unsigned char>(s[7]) == 0x08); // 2048 little-endian
  CHECK(static_cast<unsigned char>(s[10 + 8 * 5]) == 3);
}

TEST_CASE("malformed records") {
  std::stringstream bad_magic("LRPX\0\0\0\0\0\0");
  CHECK_THROWS_AS(read_descriptor(bad_magic), FormatError);

  LrpDescriptor d;
  d.bins.assign(4096, 1.0);
  std::stringstream buf;
  write_descriptor(buf, d);
  std::string s = buf.str();
  s.resize(s.size() - 3);
  std::stringstream truncated(s);
  CHECK_THROWS_AS(read_descriptor(truncated), FormatError);

  std::string wrong_count = buf.str();
  wrong_count[6] = 1; // 4097 bins
  std::stringstream wc(wrong_count);
  CHECK_THROWS_AS(read_descriptor(wc), FormatError);
}
