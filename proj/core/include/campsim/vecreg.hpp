#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace campsim {

/// Element width selector of the matrix-multiply instruction.
enum class CampMode : std::uint8_t {
  Int8,  ///< 8-bit elements: 4x16 by 16x4 operand tiles
  Int4,  ///< 4-bit elements: 4x32 by 32x4 operand tiles
};

const char* to_string(CampMode mode);
CampMode camp_mode_from_string(std::string_view name);

/// Element geometry of a 512-bit register under a given mode.
struct ElementLayout {
  CampMode mode;
  int elements_per_register;  // 64 for Int8, 128 for Int4
  int element_bits;           // 8 or 4
};

ElementLayout layout_for(CampMode mode);

inline constexpr int kRegisterBytes = 64;
inline constexpr int kLaneCount = 8;
inline constexpr int kLaneBytes = 8;

/// 512-bit register image. Byte 0 is the lowest address; lane w
/// (w in 0..7) covers bytes [8w, 8w+8). Plain value type.
struct VecReg512 {
  std::array<std::uint8_t, kRegisterBytes> bytes{};

  friend bool operator==(const VecReg512&, const VecReg512&) = default;
};

using LaneWord = std::array<std::uint8_t, kLaneBytes>;

/// Packs 64 signed bytes, element i into byte i (two's complement).
VecReg512 pack_i8(std::span<const std::int8_t> elems);
std::array<std::int8_t, 64> unpack_i8(const VecReg512& reg);

/// Packs 128 signed nibbles in [-8, 7]: element 2j in the low nibble of
/// byte j, element 2j+1 in the high nibble.
VecReg512 pack_i4(std::span<const std::int8_t> elems);
std::array<std::int8_t, 128> unpack_i4(const VecReg512& reg);

/// Packs 16 signed 32-bit words, element i into bytes [4i, 4i+4)
/// little-endian.
VecReg512 pack_i32(std::span<const std::int32_t> elems);
std::array<std::int32_t, 16> unpack_i32(const VecReg512& reg);

/// Returns bytes [8*lane, 8*lane+8). Concatenating slices 0..7
/// reconstructs the register.
LaneWord lane_slice(const VecReg512& reg, int lane);

/// Hex image, two lowercase digits per byte, byte 0 first (128 chars).
/// This is the bit-exact encoding used by golden-vector fixtures.
std::string to_hex(const VecReg512& reg);
VecReg512 from_hex(std::string_view hex);

// Nibble helpers shared by the packing routines and the execution unit.
// Nibble 2j of a register is the low nibble of byte j.
inline std::int8_t sign_extend_nibble(unsigned raw) {
  return static_cast<std::int8_t>(static_cast<int>(raw & 0xFu) >= 8
                                      ? static_cast<int>(raw & 0xFu) - 16
                                      : static_cast<int>(raw & 0xFu));
}

inline std::int8_t nibble_at(std::span<const std::uint8_t> bytes, int index) {
  const std::uint8_t byte = bytes[static_cast<std::size_t>(index >> 1)];
  return sign_extend_nibble((index & 1) ? (byte >> 4) : (byte & 0xF));
}

}  // namespace campsim
