#include "campsim/im2col.hpp"

#include <stdexcept>
#include <string>

namespace campsim {

void ConvSpec::validate() const {
  if (height <= 0 || width <= 0 || in_channels <= 0 || out_channels <= 0) {
    throw std::invalid_argument("conv spec: extents must be positive");
  }
  if (kernel <= 0 || stride <= 0 || padding < 0) {
    throw std::invalid_argument("conv spec: bad kernel/stride/padding");
  }
  if (height + 2 * padding < kernel || width + 2 * padding < kernel) {
    throw std::invalid_argument("conv spec: kernel exceeds padded input");
  }
  if (out_h() <= 0 || out_w() <= 0) {
    throw std::invalid_argument("conv spec: empty output");
  }
}

Matrix<std::int8_t> im2col(const Tensor3& input, const ConvSpec& spec) {
  spec.validate();
  if (input.h != spec.height || input.w != spec.width ||
      input.c != spec.in_channels) {
    throw std::invalid_argument(
        "im2col: tensor is " + std::to_string(input.h) + "x" +
        std::to_string(input.w) + "x" + std::to_string(input.c) +
        " but spec expects " + std::to_string(spec.height) + "x" +
        std::to_string(spec.width) + "x" + std::to_string(spec.in_channels));
  }
  const int oh = spec.out_h();
  const int ow = spec.out_w();
  Matrix<std::int8_t> out(static_cast<std::int64_t>(oh) * ow,
                          static_cast<std::int64_t>(spec.kernel) * spec.kernel *
                              spec.in_channels);
  for (int oy = 0; oy < oh; ++oy) {
    for (int ox = 0; ox < ow; ++ox) {
      const std::int64_t row = static_cast<std::int64_t>(oy) * ow + ox;
      std::int64_t col = 0;
      for (int ky = 0; ky < spec.kernel; ++ky) {
        for (int kx = 0; kx < spec.kernel; ++kx) {
          const int y = oy * spec.stride + ky - spec.padding;
          const int x = ox * spec.stride + kx - spec.padding;
          const bool inside =
              y >= 0 && y < spec.height && x >= 0 && x < spec.width;
          for (int ch = 0; ch < spec.in_channels; ++ch, ++col) {
            out(row, col) = inside ? input.at(y, x, ch) : std::int8_t{0};
          }
        }
      }
    }
  }
  return out;
}

Matrix<std::int8_t> filter_matrix(const ConvFilters& filters) {
  Matrix<std::int8_t> out(static_cast<std::int64_t>(filters.kernel) *
                              filters.kernel * filters.in_channels,
                          filters.out_channels);
  for (int oc = 0; oc < filters.out_channels; ++oc) {
    std::int64_t row = 0;
    for (int ky = 0; ky < filters.kernel; ++ky) {
      for (int kx = 0; kx < filters.kernel; ++kx) {
        for (int ic = 0; ic < filters.in_channels; ++ic, ++row) {
          out(row, oc) = filters.at(oc, ky, kx, ic);
        }
      }
    }
  }
  return out;
}

}  // namespace campsim
