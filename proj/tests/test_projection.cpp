#include "doctest.h"

#include <omp.h>

#include "lrp/oracle.hpp"
#include "lrp/projection.hpp"
#include "test_util.hpp"

using namespace lrp;

TEST_CASE("zero image projects to zeros") {
  const auto grid = local_projections(GrayImage(5, 5, 0));
  CHECK(grid.width() == 3);
  CHECK(grid.height() == 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) CHECK(grid(r, c) == ProjectionVector{});
}

TEST_CASE("constant image gives the forced vector") {
  for (int c : {1, 9, 128, 255}) {
    const auto grid = local_projections(GrayImage(7, 6, static_cast<std::uint8_t>(c)));
    const ProjectionVector expected = {3 * c, 3 * c, 3 * c, 2 * c, 3 * c, 2 * c,
                                       3 * c, 3 * c, 3 * c, 2 * c, 3 * c, 2 * c};
    CHECK(grid(0, 0) == expected);
    CHECK(grid(3, 4) == expected);
  }
}

TEST_CASE("worked 3x3 window") {
  const auto img = test::image_from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  const auto grid = local_projections(img);
  REQUIRE(grid.width() == 1);
  REQUIRE(grid.height() == 1);
  CHECK(grid(0, 0) == ProjectionVector{6, 15, 24, 6, 15, 14, 12, 15, 18, 8, 15, 12});
}

TEST_CASE("too small images are rejected") {
  CHECK_THROWS_AS(local_projections(GrayImage(2, 5)), ImageTooSmall);
  CHECK_THROWS_AS(local_projections(GrayImage(5, 2)), ImageTooSmall);
  CHECK_THROWS_AS(local_projections(GrayImage()), ImageTooSmall);
}

TEST_CASE("convolution path equals the brute-force oracle") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const auto w = 3 + rng() % 40, h = 3 + rng() % 40;
    const auto img = test::random_image(rng, w, h);
    REQUIRE(local_projections(img) == oracle::reference_projections(img));
  }
}

TEST_CASE("direction mass conservation") {
  std::mt19937_64 rng(5);
  const auto img = test::random_image(rng, 33, 21);
  const auto grid = local_projections(img);
  for (std::size_t r = 0; r < grid.height(); ++r)
    for (std::size_t c = 0; c < grid.width(); ++c) {
      const auto w = oracle::window_at(img, r + 1, c + 1);
      int total = 0;
      for (const auto &row : w)
        for (int v : row) total += v;
      const auto &v = grid(r, c);
      CHECK(v[0] + v[1] + v[2] == total);
      CHECK(v[6] + v[7] + v[8] == total);
      CHECK(v[3] + v[4] + v[5] == total - w[0][0] - w[2][2]);
      CHECK(v[9] + v[10] + v[11] == total - w[0][2] - w[2][0]);
      for (int x : v) CHECK(x <= 765);
    }
}

TEST_CASE("projections do not depend on thread count") {
  std::mt19937_64 rng(99);
  const auto img = test::random_image(rng, 129, 77);
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const auto serial = local_projections(img);
  omp_set_num_threads(4);
  const auto parallel = local_projections(img);
  omp_set_num_threads(saved);
  CHECK(serial == parallel);
}
