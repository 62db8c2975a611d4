#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "lrp/descriptor.hpp"
#include "lrp/gray_image.hpp"
#include "lrp/kernels.hpp"
#include "lrp/projection.hpp"

// Brute-force serial reference for the local projection path. Nothing here
// calls into kernel_bank() or the fast binarizers; cell memberships are
// derived from line geometry instead.
namespace lrp::oracle {

using Window3 = std::array<std::array<int, 3>, 3>;

/// Copies the 3x3 window centered at (row, col).
Window3 window_at(const GrayImage &image, std::size_t row, std::size_t col);

/// The three line sums of a window along one direction.
std::array<int, 3> window_projection(const Window3 &w, Direction d);

/// All four directions concatenated in canonical order.
ProjectionVector window_vector(const Window3 &w);

ProjectionGrid reference_projections(const GrayImage &image);

std::uint32_t reference_median_code(const ProjectionVector &v);
std::uint32_t reference_minmax_code(const ProjectionVector &v);

LrpDescriptor reference_descriptor(const GrayImage &image, Method method, bool normalize);

struct EquivalenceReport {
  std::size_t trials = 0;
  std::size_t mismatches = 0;
  std::string first_failure;

  bool passed() const { return mismatches == 0; }
};

/// Compares the convolution path with this reference on `trials` seeded
/// random images whose sides are drawn from [min_side, max_side]: the
/// projection grids and both descriptors must match exactly.
///
/// With inject_fault, one projection value of the fast path is perturbed
/// before comparison; the check must then fail.
EquivalenceReport check_equivalence(std::uint64_t seed, std::size_t trials, std::size_t min_side = 3,
                                    std::size_t max_side = 64, bool inject_fault = false);

} // namespace lrp::oracle
