#include "lrp/similarity.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "lrp/errors.hpp"

namespace lrp {

std::string_view to_string(DistanceKind k) {
  switch (k) {
  case DistanceKind::CityBlock: return "l1";
  case DistanceKind::Euclidean: return "l2";
  case DistanceKind::ChiSquared: return "chi2";
  case DistanceKind::Cosine: return "cosine";
  }
  return "?";
}

DistanceKind parse_distance(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "l1" || s == "cityblock") return DistanceKind::CityBlock;
  if (s == "l2" || s == "euclidean") return DistanceKind::Euclidean;
  if (s == "chi2" || s == "chisquared") return DistanceKind::ChiSquared;
  if (s == "cosine" || s == "cos") return DistanceKind::Cosine;
  throw Error("unknown distance '" + std::string(text) + "' (expected l1, l2, chi2 or cosine)");
}

double distance(std::span<const double> a, std::span<const double> b, DistanceKind kind) {
  if (a.size() != b.size()) throw LengthMismatch("descriptor lengths differ");
  const std::size_t n = a.size();
  switch (kind) {
  case DistanceKind::CityBlock: {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::abs(a[i] - b[i]);
    return s;
  }
  case DistanceKind::Euclidean: {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = a[i] - b[i];
      s += d * d;
    }
    return std::sqrt(s);
  }
  case DistanceKind::ChiSquared: {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double sum = a[i] + b[i];
      if (sum > 0.0) {
        const double d = a[i] - b[i];
        s += d * d / sum;
      }
    }
    return s;
  }
  case DistanceKind::Cosine: {
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      dot += a[i] * b[i];
      na += a[i] * a[i];
      nb += b[i] * b[i];
    }
    if (na == 0.0 || nb == 0.0) return 1.0;
    // sqrt(na * nb) rather than sqrt(na) * sqrt(nb): exact for a == b.
    return std::clamp(1.0 - dot / std::sqrt(na * nb), 0.0, 2.0);
  }
  }
  return 0.0;
}

double distance(const LrpDescriptor &a, const LrpDescriptor &b, DistanceKind kind) {
  if (a.method != b.method) throw MethodMismatch("descriptors use different binarization methods");
  if (a.bins.size() != b.bins.size()) throw LengthMismatch("descriptor lengths differ");
  return distance(std::span<const double>(a.bins), std::span<const double>(b.bins), kind);
}

} // namespace lrp
