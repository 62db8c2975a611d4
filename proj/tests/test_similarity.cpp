#include "doctest.h"

#include <cmath>
#include <random>

#include "lrp/similarity.hpp"

using namespace lrp;

namespace {

std::vector<double> random_histogram(std::mt19937_64 &rng, std::size_t n) {
  std::vector<double> h(n);
  double sum = 0.0;
  for (auto &x : h) {
    // sparse, like real code histograms
    x = (rng() % 4 == 0) ? static_cast<double>(rng() % 1000) : 0.0;
    sum += x;
  }
  if (sum == 0.0) h[rng() % n] = sum = 1.0;
  for (auto &x : h) x /= sum;
  return h;
}

LrpDescriptor make(std::vector<double> bins, Method m = Method::MinMax) {
  LrpDescriptor d;
  d.method = m;
  d.normalized = true;
  d.bins = std::move(bins);
  return d;
}

} // namespace

TEST_CASE("hand-evaluated examples") {
  std::vector<double> a(2048, 0.0), b(2048, 0.0);
  a[0] = 1.0;
  b[1] = 1.0;
  CHECK(distance(a, b, DistanceKind::CityBlock) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(distance(a, b, DistanceKind::ChiSquared) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(distance(a, b, DistanceKind::Cosine) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(distance(a, b, DistanceKind::Euclidean) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  std::vector<double> c(2048, 0.0), d(2048, 0.0);
  c[0] = c[1] = 0.5;
  d[0] = d[2] = 0.5;
  CHECK(std::abs(distance(c, d, DistanceKind::Euclidean) - std::sqrt(0.5)) < 1e-12);
  CHECK(std::abs(distance(c, d, DistanceKind::CityBlock) - 1.0) < 1e-12);
  // chi2: bins 1 and 2 contribute 0.25/0.5 each
  CHECK(std::abs(distance(c, d, DistanceKind::ChiSquared) - 1.0) < 1e-12);
  CHECK(std::abs(distance(c, d, DistanceKind::Cosine) - 0.5) < 1e-12);
}

TEST_CASE("identity is exactly zero") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    const auto h = random_histogram(rng, 4096);
    for (auto k : kDistanceKinds) REQUIRE(distance(h, h, k) == 0.0);
  }
}

TEST_CASE("cosine conventions") {
  std::vector<double> zero(8, 0.0), one(8, 0.0);
  one[3] = 1.0;
  CHECK(distance(zero, one, DistanceKind::Cosine) == 1.0);
  CHECK(distance(zero, zero, DistanceKind::Cosine) == 1.0);
  std::vector<double> scaled(8, 0.0);
  scaled[3] = 5.0;
  CHECK(distance(one, scaled, DistanceKind::Cosine) < 1e-12);
}

TEST_CASE("chi2 skips empty bins") {
  std::vector<double> a = {0.0, 0.5, 0.5}, b = {0.0, 0.5, 0.5};
  CHECK(distance(a, b, DistanceKind::ChiSquared) == 0.0);
  const std::vector<double> c = {0.0, 1.0, 0.0};
  CHECK(std::isfinite(distance(a, c, DistanceKind::ChiSquared)));
}

TEST_CASE("symmetry, non-negativity, triangle inequality") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 2000; ++i) {
    const auto a = random_histogram(rng, 256), b = random_histogram(rng, 256), c = random_histogram(rng, 256);
    for (auto k : kDistanceKinds) {
      const double ab = distance(a, b, k);
      REQUIRE(ab == distance(b, a, k));
      REQUIRE(ab >= 0.0);
    }
    const double cos = distance(a, b, DistanceKind::Cosine);
    REQUIRE(cos <= 2.0);
    for (auto k : {DistanceKind::CityBlock, DistanceKind::Euclidean})
      REQUIRE(distance(a, c, k) <= distance(a, b, k) + distance(b, c, k) + 1e-12);
  }
}

TEST_CASE("checked descriptor variant") {
  const auto a = make(std::vector<double>(2048, 1.0 / 2048));
  const auto b = make(std::vector<double>(4096, 1.0 / 4096), Method::Median);
  CHECK_THROWS_AS(distance(a, b, DistanceKind::CityBlock), MethodMismatch);
  auto c = make(std::vector<double>(10, 0.1));
  CHECK_THROWS_AS(distance(a, c, DistanceKind::CityBlock), LengthMismatch);
  CHECK(distance(a, a, DistanceKind::ChiSquared) == 0.0);
}

TEST_CASE("distance names") {
  for (auto k : kDistanceKinds) CHECK(parse_distance(to_string(k)) == k);
  CHECK(to_string(DistanceKind::ChiSquared) == "chi2");
  CHECK_THROWS_AS(parse_distance("l3"), Error);
}
