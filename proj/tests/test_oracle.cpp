#include "doctest.h"

#include "lrp/descriptor.hpp"
#include "lrp/oracle.hpp"
#include "test_util.hpp"

using namespace lrp;

namespace {
const oracle::Window3 kCounting = {{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}};
}

TEST_CASE("window projections of the counting window") {
  using oracle::window_projection;
  CHECK(window_projection(kCounting, Direction::Deg0) == std::array<int, 3>{6, 15, 24});
  CHECK(window_projection(kCounting, Direction::Deg45) == std::array<int, 3>{6, 15, 14});
  CHECK(window_projection(kCounting, Direction::Deg90) == std::array<int, 3>{12, 15, 18});
  CHECK(window_projection(kCounting, Direction::Deg135) == std::array<int, 3>{8, 15, 12});
}

TEST_CASE("zero window") {
  const oracle::Window3 zero{};
  for (auto d : kDirections) CHECK(oracle::window_projection(zero, d) == std::array<int, 3>{0, 0, 0});
}

TEST_CASE("0 and 90 degree triples both sum to the window") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 5000; ++i) {
    oracle::Window3 w;
    int total = 0;
    for (auto &row : w)
      for (auto &v : row) total += (v = static_cast<int>(rng() % 256));
    const auto a = oracle::window_projection(w, Direction::Deg0);
    const auto b = oracle::window_projection(w, Direction::Deg90);
    REQUIRE(a[0] + a[1] + a[2] == total);
    REQUIRE(b[0] + b[1] + b[2] == total);
  }
}

TEST_CASE("reference descriptor matches the fast path") {
  SUBCASE("constant image") {
    const GrayImage img(10, 10, 0);
    CHECK(oracle::reference_descriptor(img, Method::Median, false) == descriptor(img, Method::Median, false));
  }
  SUBCASE("1000 random 16x16 images") {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 1000; ++i) {
      const auto img = test::random_image(rng, 16, 16);
      for (auto m : {Method::Median, Method::MinMax})
        REQUIRE(oracle::reference_descriptor(img, m, true) == descriptor(img, m, true));
    }
  }
  SUBCASE("sizes 3..64") {
    std::mt19937_64 rng(33);
    for (std::size_t w = 3; w <= 64; w += 7)
      for (std::size_t h = 3; h <= 64; h += 5) {
        const auto img = test::random_image(rng, w, h);
        for (auto m : {Method::Median, Method::MinMax})
          REQUIRE(oracle::reference_descriptor(img, m, false) == descriptor(img, m, false));
      }
  }
}

TEST_CASE("3x4 image has a 1x2 interior") {
  std::mt19937_64 rng(34);
  const auto img = test::random_image(rng, 3, 4);
  const auto d = oracle::reference_descriptor(img, Method::MinMax, false);
  CHECK(d.total() == 2.0);
  CHECK_THROWS_AS(oracle::reference_descriptor(GrayImage(3, 2), Method::MinMax, false), ImageTooSmall);
}
