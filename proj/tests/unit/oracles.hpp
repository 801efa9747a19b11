#pragma once

// Test-side reference implementations. These re-derive results from the
// documented layouts and plain wide arithmetic, independent of the
// library's execution paths, and exist only to check them.

#include <array>
#include <cstdint>
#include <limits>

#include "campsim/im2col.hpp"
#include "campsim/matrix.hpp"
#include "campsim/vecreg.hpp"

namespace campsim::test {

inline std::int32_t wrap32_ref(std::int64_t exact) {
  const auto u = static_cast<std::uint32_t>(static_cast<std::uint64_t>(exact));
  return u >= 0x80000000u
             ? static_cast<std::int32_t>(static_cast<std::int64_t>(u) -
                                         0x100000000ll)
             : static_cast<std::int32_t>(u);
}

struct TileOracle {
  std::array<std::int32_t, 16> vr0{};
  bool overflow = false;
};

/// Brute-force semantics of one instruction: decode the operand tiles
/// straight from register bytes, run the triple loop exactly, add the
/// accumulator, wrap mod 2^32.
inline TileOracle camp_tile_oracle(const VecReg512& vr0, const VecReg512& vr1,
                                   const VecReg512& vr2, CampMode mode) {
  const int kext = mode == CampMode::Int8 ? 16 : 32;
  const auto elem = [&](const VecReg512& r, int idx) -> int {
    if (mode == CampMode::Int8) {
      return static_cast<std::int8_t>(r.bytes[static_cast<std::size_t>(idx)]);
    }
    const std::uint8_t b = r.bytes[static_cast<std::size_t>(idx / 2)];
    const int v = (idx & 1) ? (b >> 4) : (b & 0xF);
    return v >= 8 ? v - 16 : v;
  };

  TileOracle out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      // accumulator element (i, j), little-endian int32 at bytes [4*(4i+j))
      const int idx = 4 * i + j;
      std::uint32_t acc_bits = 0;
      for (int b = 0; b < 4; ++b) {
        acc_bits |= static_cast<std::uint32_t>(
                        vr0.bytes[static_cast<std::size_t>(4 * idx + b)])
                    << (8 * b);
      }
      const auto acc = static_cast<std::int32_t>(acc_bits);
      std::int64_t exact = acc;
      for (int k = 0; k < kext; ++k) {
        // A column-major 4 x kext, B row-major kext x 4
        exact += static_cast<std::int64_t>(elem(vr1, 4 * k + i)) *
                 elem(vr2, 4 * k + j);
      }
      if (exact < std::numeric_limits<std::int32_t>::min() ||
          exact > std::numeric_limits<std::int32_t>::max()) {
        out.overflow = true;
      }
      out.vr0[static_cast<std::size_t>(idx)] = wrap32_ref(exact);
    }
  }
  return out;
}

/// GeMM reference with a different accumulation order (k-outer) from the
/// library's naive kernel.
inline Matrix<std::int32_t> gemm_ref_kouter(const Matrix<std::int8_t>& a,
                                            const Matrix<std::int8_t>& b) {
  Matrix<std::int64_t> acc(a.rows(), b.cols());
  for (std::int64_t kk = 0; kk < a.cols(); ++kk) {
    for (std::int64_t i = 0; i < a.rows(); ++i) {
      const std::int64_t av = a(i, kk);
      for (std::int64_t j = 0; j < b.cols(); ++j) {
        acc(i, j) += av * b(kk, j);
      }
    }
  }
  Matrix<std::int32_t> c(a.rows(), b.cols());
  for (std::int64_t i = 0; i < a.rows(); ++i) {
    for (std::int64_t j = 0; j < b.cols(); ++j) {
      c(i, j) = wrap32_ref(acc(i, j));
    }
  }
  return c;
}

/// Sliding-window convolution, (oy*out_w + ox) x oc output to match the
/// im2col + GeMM path.
inline Matrix<std::int32_t> conv_direct(const Tensor3& input,
                                        const ConvFilters& filters,
                                        const ConvSpec& spec) {
  const int oh = spec.out_h();
  const int ow = spec.out_w();
  Matrix<std::int32_t> out(static_cast<std::int64_t>(oh) * ow,
                           filters.out_channels);
  for (int oy = 0; oy < oh; ++oy) {
    for (int ox = 0; ox < ow; ++ox) {
      for (int oc = 0; oc < filters.out_channels; ++oc) {
        std::int64_t acc = 0;
        for (int ky = 0; ky < spec.kernel; ++ky) {
          for (int kx = 0; kx < spec.kernel; ++kx) {
            const int y = oy * spec.stride + ky - spec.padding;
            const int x = ox * spec.stride + kx - spec.padding;
            if (y < 0 || y >= spec.height || x < 0 || x >= spec.width) continue;
            for (int ic = 0; ic < spec.in_channels; ++ic) {
              acc += static_cast<std::int64_t>(input.at(y, x, ic)) *
                     filters.at(oc, ky, kx, ic);
            }
          }
        }
        out(static_cast<std::int64_t>(oy) * ow + ox, oc) = wrap32_ref(acc);
      }
    }
  }
  return out;
}

}  // namespace campsim::test
