#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "lrp/descriptor.hpp"

namespace lrp {

enum class DistanceKind : std::uint8_t { CityBlock, Euclidean, ChiSquared, Cosine };

inline constexpr std::array<DistanceKind, 4> kDistanceKinds = {
    DistanceKind::CityBlock, DistanceKind::Euclidean, DistanceKind::ChiSquared, DistanceKind::Cosine};

/// CLI spelling: "l1", "l2", "chi2", "cosine".
std::string_view to_string(DistanceKind k);
DistanceKind parse_distance(std::string_view text);

/// Distance over raw bin arrays of equal length. Bins are accumulated in
/// ascending index order.
///
/// chi2 skips bins where a+b == 0 and has no 1/2 factor. cosine is
/// 1 - cos(a, b), and 1 when either vector is all zero.
double distance(std::span<const double> a, std::span<const double> b, DistanceKind kind);

/// Checked variant: throws MethodMismatch or LengthMismatch.
double distance(const LrpDescriptor &a, const LrpDescriptor &b, DistanceKind kind);

} // namespace lrp
