#include "campsim/vecreg.hpp"

#include <cstdio>
#include <stdexcept>

namespace campsim {

const char* to_string(CampMode mode) {
  return mode == CampMode::Int8 ? "int8" : "int4";
}

CampMode camp_mode_from_string(std::string_view name) {
  if (name == "int8") return CampMode::Int8;
  if (name == "int4") return CampMode::Int4;
  throw std::invalid_argument("unknown mode: " + std::string(name) +
                              " (expected int8 or int4)");
}

ElementLayout layout_for(CampMode mode) {
  if (mode == CampMode::Int8) return {mode, 64, 8};
  return {mode, 128, 4};
}

VecReg512 pack_i8(std::span<const std::int8_t> elems) {
  if (elems.size() != 64) {
    throw std::invalid_argument("pack_i8 expects 64 elements, got " +
                                std::to_string(elems.size()));
  }
  VecReg512 reg;
  for (int i = 0; i < 64; ++i) {
    reg.bytes[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(elems[static_cast<std::size_t>(i)]);
  }
  return reg;
}

std::array<std::int8_t, 64> unpack_i8(const VecReg512& reg) {
  std::array<std::int8_t, 64> out{};
  for (int i = 0; i < 64; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(reg.bytes[static_cast<std::size_t>(i)]);
  }
  return out;
}

VecReg512 pack_i4(std::span<const std::int8_t> elems) {
  if (elems.size() != 128) {
    throw std::invalid_argument("pack_i4 expects 128 elements, got " +
                                std::to_string(elems.size()));
  }
  VecReg512 reg;
  for (int j = 0; j < 64; ++j) {
    const int lo = elems[static_cast<std::size_t>(2 * j)];
    const int hi = elems[static_cast<std::size_t>(2 * j + 1)];
    if (lo < -8 || lo > 7 || hi < -8 || hi > 7) {
      throw std::out_of_range("pack_i4 element outside [-8, 7] at index " +
                              std::to_string(lo < -8 || lo > 7 ? 2 * j : 2 * j + 1));
    }
    reg.bytes[static_cast<std::size_t>(j)] =
        static_cast<std::uint8_t>((lo & 0xF) | ((hi & 0xF) << 4));
  }
  return reg;
}

std::array<std::int8_t, 128> unpack_i4(const VecReg512& reg) {
  std::array<std::int8_t, 128> out{};
  for (int i = 0; i < 128; ++i) {
    out[static_cast<std::size_t>(i)] = nibble_at(reg.bytes, i);
  }
  return out;
}

VecReg512 pack_i32(std::span<const std::int32_t> elems) {
  if (elems.size() != 16) {
    throw std::invalid_argument("pack_i32 expects 16 elements, got " +
                                std::to_string(elems.size()));
  }
  VecReg512 reg;
  for (int i = 0; i < 16; ++i) {
    const auto v = static_cast<std::uint32_t>(elems[static_cast<std::size_t>(i)]);
    reg.bytes[static_cast<std::size_t>(4 * i + 0)] = static_cast<std::uint8_t>(v & 0xFF);
    reg.bytes[static_cast<std::size_t>(4 * i + 1)] = static_cast<std::uint8_t>((v >> 8) & 0xFF);
    reg.bytes[static_cast<std::size_t>(4 * i + 2)] = static_cast<std::uint8_t>((v >> 16) & 0xFF);
    reg.bytes[static_cast<std::size_t>(4 * i + 3)] = static_cast<std::uint8_t>((v >> 24) & 0xFF);
  }
  return reg;
}

std::array<std::int32_t, 16> unpack_i32(const VecReg512& reg) {
  std::array<std::int32_t, 16> out{};
  for (int i = 0; i < 16; ++i) {
    std::uint32_t v = 0;
    v |= static_cast<std::uint32_t>(reg.bytes[static_cast<std::size_t>(4 * i + 0)]);
    v |= static_cast<std::uint32_t>(reg.bytes[static_cast<std::size_t>(4 * i + 1)]) << 8;
    v |= static_cast<std::uint32_t>(reg.bytes[static_cast<std::size_t>(4 * i + 2)]) << 16;
    v |= static_cast<std::uint32_t>(reg.bytes[static_cast<std::size_t>(4 * i + 3)]) << 24;
    out[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(v);
  }
  return out;
}

LaneWord lane_slice(const VecReg512& reg, int lane) {
  if (lane < 0 || lane >= kLaneCount) {
    throw std::out_of_range("lane index " + std::to_string(lane) +
                            " outside [0, 7]");
  }
  LaneWord word{};
  for (int i = 0; i < kLaneBytes; ++i) {
    word[static_cast<std::size_t>(i)] =
        reg.bytes[static_cast<std::size_t>(lane * kLaneBytes + i)];
  }
  return word;
}

std::string to_hex(const VecReg512& reg) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * kRegisterBytes);
  for (const std::uint8_t byte : reg.bytes) {
    out.push_back(kDigits[byte >> 4]);
    out.push_back(kDigits[byte & 0xF]);
  }
  return out;
}

namespace {

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  throw std::invalid_argument(std::string("invalid hex digit: ") + c);
}

}  // namespace

VecReg512 from_hex(std::string_view hex) {
  if (hex.size() != 2 * kRegisterBytes) {
    throw std::invalid_argument("register hex image must be 128 digits, got " +
                                std::to_string(hex.size()));
  }
  VecReg512 reg;
  for (int i = 0; i < kRegisterBytes; ++i) {
    reg.bytes[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(
        (hex_digit(hex[static_cast<std::size_t>(2 * i)]) << 4) |
        hex_digit(hex[static_cast<std::size_t>(2 * i + 1)]));
  }
  return reg;
}

}  // namespace campsim
