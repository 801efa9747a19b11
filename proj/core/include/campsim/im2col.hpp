#pragma once

#include <cstdint>
#include <vector>

#include "campsim/matrix.hpp"

namespace campsim {

/// Convolution layer geometry (square kernel, equal stride/padding in
/// both spatial dimensions).
struct ConvSpec {
  int height = 0;
  int width = 0;
  int in_channels = 0;
  int out_channels = 0;
  int kernel = 1;
  int stride = 1;
  int padding = 0;

  int out_h() const { return (height + 2 * padding - kernel) / stride + 1; }
  int out_w() const { return (width + 2 * padding - kernel) / stride + 1; }
  void validate() const;
};

/// H x W x C activation tensor, row-major [y][x][c].
struct Tensor3 {
  int h = 0;
  int w = 0;
  int c = 0;
  std::vector<std::int8_t> data;

  Tensor3() = default;
  Tensor3(int h_, int w_, int c_)
      : h(h_), w(w_), c(c_),
        data(static_cast<std::size_t>(h_) * static_cast<std::size_t>(w_) *
             static_cast<std::size_t>(c_)) {}

  std::int8_t& at(int y, int x, int ch) {
    return data[(static_cast<std::size_t>(y) * static_cast<std::size_t>(w) +
                 static_cast<std::size_t>(x)) * static_cast<std::size_t>(c) +
                static_cast<std::size_t>(ch)];
  }
  std::int8_t at(int y, int x, int ch) const {
    return data[(static_cast<std::size_t>(y) * static_cast<std::size_t>(w) +
                 static_cast<std::size_t>(x)) * static_cast<std::size_t>(c) +
                static_cast<std::size_t>(ch)];
  }
};

/// Filter bank, [out_channel][ky][kx][in_channel].
struct ConvFilters {
  int out_channels = 0;
  int kernel = 0;
  int in_channels = 0;
  std::vector<std::int8_t> data;

  ConvFilters() = default;
  ConvFilters(int oc, int kk, int ic)
      : out_channels(oc), kernel(kk), in_channels(ic),
        data(static_cast<std::size_t>(oc) * static_cast<std::size_t>(kk) *
             static_cast<std::size_t>(kk) * static_cast<std::size_t>(ic)) {}

  std::int8_t& at(int oc, int ky, int kx, int ic) {
    return data[((static_cast<std::size_t>(oc) * static_cast<std::size_t>(kernel) +
                  static_cast<std::size_t>(ky)) * static_cast<std::size_t>(kernel) +
                 static_cast<std::size_t>(kx)) * static_cast<std::size_t>(in_channels) +
                static_cast<std::size_t>(ic)];
  }
  std::int8_t at(int oc, int ky, int kx, int ic) const {
    return data[((static_cast<std::size_t>(oc) * static_cast<std::size_t>(kernel) +
                  static_cast<std::size_t>(ky)) * static_cast<std::size_t>(kernel) +
                 static_cast<std::size_t>(kx)) * static_cast<std::size_t>(in_channels) +
                static_cast<std::size_t>(ic)];
  }
};

/// Unrolls input windows into rows: row (oy*out_w + ox) holds the
/// receptive field of output pixel (oy, ox), columns ordered
/// (ky, kx, channel). Out-of-bounds positions (padding) are zero.
Matrix<std::int8_t> im2col(const Tensor3& input, const ConvSpec& spec);

/// Filters reshaped to (kernel^2 * in_channels) x out_channels, rows in
/// the same (ky, kx, channel) order im2col emits.
Matrix<std::int8_t> filter_matrix(const ConvFilters& filters);

}  // namespace campsim
