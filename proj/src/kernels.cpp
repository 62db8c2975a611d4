#include "lrp/kernels.hpp"

namespace lrp {

std::string_view to_string(Direction d) {
  switch (d) {
  case Direction::Deg0: return "0";
  case Direction::Deg45: return "45";
  case Direction::Deg90: return "90";
  case Direction::Deg135: return "135";
  }
  return "?";
}

int RadonKernel::weight_sum() const {
  int s = 0;
  for (const auto &row : weights)
    for (auto w : row) s += w;
  return s;
}

const std::array<RadonKernel, 12> &kernel_bank() {
  using D = Direction;
  // clang-format off
  static const std::array<RadonKernel, 12> bank = {{
    {D::Deg0,   0, {{{1, 1, 1}, {0, 0, 0}, {0, 0, 0}}}},
    {D::Deg0,   1, {{{0, 0, 0}, {1, 1, 1}, {0, 0, 0}}}},
    {D::Deg0,   2, {{{0, 0, 0}, {0, 0, 0}, {1, 1, 1}}}},

    {D::Deg45,  0, {{{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}}},
    {D::Deg45,  1, {{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}}},
    {D::Deg45,  2, {{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}}}},

    {D::Deg90,  0, {{{1, 0, 0}, {1, 0, 0}, {1, 0, 0}}}},
    {D::Deg90,  1, {{{0, 1, 0}, {0, 1, 0}, {0, 1, 0}}}},
    {D::Deg90,  2, {{{0, 0, 1}, {0, 0, 1}, {0, 0, 1}}}},

    {D::Deg135, 0, {{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}}},
    {D::Deg135, 1, {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}},
    {D::Deg135, 2, {{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}}},
  }};
  // clang-format on
  return bank;
}

} // namespace lrp
