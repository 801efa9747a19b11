#pragma once

#include <array>
#include <cstdint>

#include "campsim/vecreg.hpp"

// Functional model of the matrix-multiply-accumulate instruction.
//
// camp(VR0, VR1, VR2, mode) computes VR0 += A x B where VR1 holds A
// column-major (4x16 int8 or 4x32 int4), VR2 holds B row-major (16x4 or
// 32x4), and VR0 holds the 4x4 int32 result tile row-major.
//
// Dataflow: the 512-bit operands split into eight 64-bit lane segments.
// Lane w owns the k-slice {2w, 2w+1} in int8 mode and {4w..4w+3} in int4
// mode. Each lane forms outer products over the halves of its segment,
// 16 intra-lane adders fold same-index products within the lane, and 16
// shared inter-lane accumulators fold the per-lane partials into the
// output indices. Accumulation into VR0 wraps in 32-bit two's complement;
// an advisory flag reports any index whose exact sum left the int32 range.

namespace campsim {

/// Datapath activity of one lane during one instruction.
/// multipliers_used counts 8-bit blocks in int8 mode and 4-bit blocks in
/// int4 mode; intra_adds counts the index-wise folds performed by the 16
/// intra-lane adders (one per output index per extra outer-product pair).
struct LaneTrace {
  int lane = 0;
  int multipliers_used = 0;
  int intra_adds = 0;
  int outer_product_pairs = 0;

  friend bool operator==(const LaneTrace&, const LaneTrace&) = default;
};

/// 4x4 partial-sum tile, row-major, held exact (pre-wrap).
using TilePartials = std::array<std::int64_t, 16>;

struct LaneOuterResult {
  TilePartials partials{};
  LaneTrace trace;
};

/// Outer-product step of a single lane over its two operand words.
LaneOuterResult lane_outer(const LaneWord& lane_a, const LaneWord& lane_b,
                           CampMode mode, int lane_index = 0);

/// Inter-lane accumulators: output[j] = sum over lanes of partials[lane][j].
TilePartials interlane_reduce(
    const std::array<TilePartials, kLaneCount>& partials);

struct CampResult {
  VecReg512 vr0;  ///< updated accumulator register (16 x int32, row-major 4x4)
  std::array<LaneTrace, kLaneCount> traces{};
  bool overflow_flag = false;
};

CampResult camp_exec(const VecReg512& vr0, const VecReg512& vr1,
                     const VecReg512& vr2, CampMode mode);

/// Two's-complement wrap of an exact sum into int32.
inline std::int32_t wrap_i32(std::int64_t value) {
  return static_cast<std::int32_t>(static_cast<std::uint32_t>(
      static_cast<std::uint64_t>(value)));
}

}  // namespace campsim
