#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

// Divide-and-conquer integer multiplier built from 4-bit blocks.
//
// A 2N-bit operand splits as A = a1*2^N + a0 with a1 signed and a0
// unsigned, so one 8-bit product is four 4-bit sub-products combined as
// P = a1*b1*2^8 + (a1*b0 + a0*b1)*2^4 + a0*b0. Run the same four blocks
// without the shift-and-add network and they yield four independent
// signed 4-bit products instead; that reuse is what gives the execution
// unit its 4-bit mode for free.

namespace campsim {

enum class Signedness : std::uint8_t { Signed, Unsigned };

/// One 4-bit input of the building-block multiplier.
/// Signed operands live in [-8, 7], unsigned in [0, 15].
struct NibbleOperand {
  int value = 0;
  Signedness signedness = Signedness::Signed;
};

/// The 4-bit building block: exact product, no wrapping.
inline int mul4(NibbleOperand a, NibbleOperand b) {
  const auto check = [](NibbleOperand op) {
    const bool ok = op.signedness == Signedness::Signed
                        ? (op.value >= -8 && op.value <= 7)
                        : (op.value >= 0 && op.value <= 15);
    if (!ok) {
      throw std::out_of_range("mul4 operand " + std::to_string(op.value) +
                              " outside its 4-bit range");
    }
  };
  check(a);
  check(b);
  return a.value * b.value;
}

/// Halves of a 2N-bit word: value == hi*2^N + lo, hi signed, lo unsigned.
struct SplitWord {
  int hi = 0;
  int lo = 0;
};

inline SplitWord decompose(int value, int half_bits) {
  if (half_bits <= 0 || half_bits >= 16) {
    throw std::invalid_argument("decompose: unsupported half-width " +
                                std::to_string(half_bits));
  }
  const int full_bits = 2 * half_bits;
  const int lo_bound = -(1 << (full_bits - 1));
  const int hi_bound = (1 << (full_bits - 1)) - 1;
  if (value < lo_bound || value > hi_bound) {
    throw std::out_of_range("decompose: " + std::to_string(value) +
                            " not representable in " +
                            std::to_string(full_bits) + " bits");
  }
  return {value >> half_bits, value & ((1 << half_bits) - 1)};
}

/// Four 4-bit sub-products of one 8-bit multiply plus their composition.
/// composed == hi_hi*2^8 + (hi_lo + lo_hi)*2^4 + lo_lo == a*b.
struct HybridProduct8 {
  int hi_hi = 0;
  int hi_lo = 0;
  int lo_hi = 0;
  int lo_lo = 0;
  int composed = 0;
};

inline HybridProduct8 hybrid_mul8(std::int8_t a, std::int8_t b) {
  const SplitWord sa = decompose(a, 4);
  const SplitWord sb = decompose(b, 4);
  HybridProduct8 p;
  p.hi_hi = mul4({sa.hi, Signedness::Signed}, {sb.hi, Signedness::Signed});
  p.hi_lo = mul4({sa.hi, Signedness::Signed}, {sb.lo, Signedness::Unsigned});
  p.lo_hi = mul4({sa.lo, Signedness::Unsigned}, {sb.hi, Signedness::Signed});
  p.lo_lo = mul4({sa.lo, Signedness::Unsigned}, {sb.lo, Signedness::Unsigned});
  p.composed = (p.hi_hi << 8) + ((p.hi_lo + p.lo_hi) << 4) + p.lo_lo;
  return p;
}

/// The 4-bit-mode reuse of one 8-bit block: the same four sub-multipliers
/// run as independent signed products, with no shift/compose applied.
struct QuadProducts {
  int hi_hi = 0;
  int hi_lo = 0;
  int lo_hi = 0;
  int lo_lo = 0;
};

inline QuadProducts quad_products(std::int8_t a_hi, std::int8_t a_lo,
                                  std::int8_t b_hi, std::int8_t b_lo) {
  QuadProducts q;
  q.hi_hi = mul4({a_hi, Signedness::Signed}, {b_hi, Signedness::Signed});
  q.hi_lo = mul4({a_hi, Signedness::Signed}, {b_lo, Signedness::Signed});
  q.lo_hi = mul4({a_lo, Signedness::Signed}, {b_hi, Signedness::Signed});
  q.lo_lo = mul4({a_lo, Signedness::Signed}, {b_lo, Signedness::Signed});
  return q;
}

/// Recursive composition: multiplies two signed 2N-bit operands out of
/// N-bit building blocks. Supported half-widths: 4 (8-bit operands) and
/// 8 (16-bit operands built from 8-bit hybrid blocks).
std::int64_t compose2n(std::int32_t a, std::int32_t b, int half_bits);

}  // namespace campsim
