#include "campsim/hybridmul.hpp"

namespace campsim {

namespace {

// Generic recursion over Eq-style halving. Signed operands split into a
// signed high half and an unsigned low half; unsigned operands split into
// two unsigned halves. The 4-bit leaf is the building block.
std::int64_t mul_tree(std::int64_t a, bool a_signed, std::int64_t b,
                      bool b_signed, int width_bits) {
  if (width_bits == 4) {
    return mul4({static_cast<int>(a),
                 a_signed ? Signedness::Signed : Signedness::Unsigned},
                {static_cast<int>(b),
                 b_signed ? Signedness::Signed : Signedness::Unsigned});
  }
  const int half = width_bits / 2;
  const std::int64_t mask = (std::int64_t{1} << half) - 1;
  const std::int64_t a_hi = a >> half;  // keeps the operand's signedness
  const std::int64_t a_lo = a & mask;
  const std::int64_t b_hi = b >> half;
  const std::int64_t b_lo = b & mask;

  const std::int64_t hh = mul_tree(a_hi, a_signed, b_hi, b_signed, half);
  const std::int64_t hl = mul_tree(a_hi, a_signed, b_lo, false, half);
  const std::int64_t lh = mul_tree(a_lo, false, b_hi, b_signed, half);
  const std::int64_t ll = mul_tree(a_lo, false, b_lo, false, half);

  return (hh << width_bits) + ((hl + lh) << half) + ll;
}

}  // namespace

std::int64_t compose2n(std::int32_t a, std::int32_t b, int half_bits) {
  if (half_bits != 4 && half_bits != 8) {
    throw std::invalid_argument("compose2n: unsupported half-width " +
                                std::to_string(half_bits) +
                                " (supported: 4, 8)");
  }
  const int full_bits = 2 * half_bits;
  const std::int32_t lo_bound = -(std::int32_t{1} << (full_bits - 1));
  const std::int32_t hi_bound = (std::int32_t{1} << (full_bits - 1)) - 1;
  for (const std::int32_t v : {a, b}) {
    if (v < lo_bound || v > hi_bound) {
      throw std::out_of_range("compose2n: operand " + std::to_string(v) +
                              " not representable in " +
                              std::to_string(full_bits) + " bits");
    }
  }
  return mul_tree(a, true, b, true, full_bits);
}

}  // namespace campsim
