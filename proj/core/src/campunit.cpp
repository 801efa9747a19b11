#include "campsim/campunit.hpp"

#include <limits>
#include <span>

#include "campsim/hybridmul.hpp"

namespace campsim {

namespace {

LaneOuterResult lane_outer_i8(const LaneWord& lane_a, const LaneWord& lane_b,
                              int lane_index) {
  LaneOuterResult out;
  out.trace = {lane_index, /*multipliers_used=*/32, /*intra_adds=*/16,
               /*outer_product_pairs=*/2};
  // Halves: bytes [0,4) are column k0 of A / row k0 of B, bytes [4,8)
  // column/row k1. 16 products per half, folded index-wise.
  for (int i = 0; i < 4; ++i) {
    const auto a0 = static_cast<std::int8_t>(lane_a[static_cast<std::size_t>(i)]);
    const auto a1 = static_cast<std::int8_t>(lane_a[static_cast<std::size_t>(i + 4)]);
    for (int j = 0; j < 4; ++j) {
      const auto b0 = static_cast<std::int8_t>(lane_b[static_cast<std::size_t>(j)]);
      const auto b1 = static_cast<std::int8_t>(lane_b[static_cast<std::size_t>(j + 4)]);
      out.partials[static_cast<std::size_t>(4 * i + j)] =
          static_cast<std::int64_t>(hybrid_mul8(a0, b0).composed) +
          static_cast<std::int64_t>(hybrid_mul8(a1, b1).composed);
    }
  }
  return out;
}

LaneOuterResult lane_outer_i4(const LaneWord& lane_a, const LaneWord& lane_b,
                              int lane_index) {
  LaneOuterResult out;
  out.trace = {lane_index, /*multipliers_used=*/128, /*intra_adds=*/48,
               /*outer_product_pairs=*/4};
  // 16 nibbles per word = four k-columns of A (rows of B), 4 nibbles each.
  // Each half of the word covers two k-indices; an 8-bit block takes the
  // (k, k+1) element pair from each operand and its hi_hi/lo_lo outputs
  // are the same-k products. The cross products the grid also produces do
  // not belong to any output index and are masked.
  std::int8_t a[4][4];
  std::int8_t b[4][4];
  const std::span<const std::uint8_t> abytes(lane_a);
  const std::span<const std::uint8_t> bbytes(lane_b);
  for (int kk = 0; kk < 4; ++kk) {
    for (int e = 0; e < 4; ++e) {
      a[kk][e] = nibble_at(abytes, 4 * kk + e);
      b[kk][e] = nibble_at(bbytes, 4 * kk + e);
    }
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      std::int64_t acc = 0;
      for (int half = 0; half < 2; ++half) {
        const int k0 = 2 * half;
        const QuadProducts q = quad_products(a[k0][i], a[k0 + 1][i],
                                             b[k0][j], b[k0 + 1][j]);
        acc += q.hi_hi + q.lo_lo;  // cross terms q.hi_lo / q.lo_hi masked
      }
      out.partials[static_cast<std::size_t>(4 * i + j)] = acc;
    }
  }
  return out;
}

}  // namespace

LaneOuterResult lane_outer(const LaneWord& lane_a, const LaneWord& lane_b,
                           CampMode mode, int lane_index) {
  return mode == CampMode::Int8 ? lane_outer_i8(lane_a, lane_b, lane_index)
                                : lane_outer_i4(lane_a, lane_b, lane_index);
}

TilePartials interlane_reduce(
    const std::array<TilePartials, kLaneCount>& partials) {
  TilePartials out{};
  for (const TilePartials& lane : partials) {
    for (std::size_t j = 0; j < out.size(); ++j) {
      out[j] += lane[j];
    }
  }
  return out;
}

CampResult camp_exec(const VecReg512& vr0, const VecReg512& vr1,
                     const VecReg512& vr2, CampMode mode) {
  CampResult result;
  std::array<TilePartials, kLaneCount> lanes{};
  for (int w = 0; w < kLaneCount; ++w) {
    LaneOuterResult lane =
        lane_outer(lane_slice(vr1, w), lane_slice(vr2, w), mode, w);
    lanes[static_cast<std::size_t>(w)] = lane.partials;
    result.traces[static_cast<std::size_t>(w)] = lane.trace;
  }
  const TilePartials totals = interlane_reduce(lanes);

  const std::array<std::int32_t, 16> acc = unpack_i32(vr0);
  std::array<std::int32_t, 16> updated{};
  for (std::size_t idx = 0; idx < totals.size(); ++idx) {
    const std::int64_t exact = static_cast<std::int64_t>(acc[idx]) + totals[idx];
    if (exact < std::numeric_limits<std::int32_t>::min() ||
        exact > std::numeric_limits<std::int32_t>::max()) {
      result.overflow_flag = true;
    }
    updated[idx] = wrap_i32(exact);
  }
  result.vr0 = pack_i32(updated);
  return result;
}

}  // namespace campsim
