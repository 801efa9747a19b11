#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "campsim/campunit.hpp"
#include "campsim/costmodel.hpp"
#include "campsim/matrix.hpp"

// Five-loop blocked GeMM in the GotoBLAS style: C and B split into
// panels of nc columns (jc loop), B into kc-high panels (pc loop), A
// packed into mc x kc panels (ic loop), then register-blocked jr/ir
// loops around a 4x4 micro-kernel. Ragged edges are handled by
// zero-padded packing, so the micro-kernel always sees full tiles.

namespace campsim {

/// Cache-blocking parameters. The register tile is fixed at 4x4 by the
/// instruction's output shape; kc is rounded up internally to the mode's
/// k-step at packing time.
struct BlockingParams {
  int nc = 4096;
  int kc = 256;
  int mc = 128;
  static constexpr int mr = 4;
  static constexpr int nr = 4;

  void validate() const;
};

/// k-extent consumed per instruction: 16 (int8) or 32 (int4).
int k_step(CampMode mode);

enum class Backend { CampI8, CampI4, NaiveI32, GenericVecModel };

Backend backend_from_string(std::string_view name);
const char* to_string(Backend backend);
/// The element mode a camp backend computes in; nullopt for the others.
std::optional<CampMode> backend_mode(Backend backend);

/// Packed A panel: slivers of mr rows stored column-major, k-padded.
/// Sliver s holds element (i, k) of rows [s*mr, s*mr+mr) at
/// data[s*mr*kc_padded + k*mr + i]; padded rows and k positions are zero.
struct PackedPanelA {
  std::vector<std::int8_t> data;
  int rows = 0;
  int kc = 0;
  int kc_padded = 0;
  int slivers = 0;

  std::span<const std::int8_t> sliver(int s) const {
    const auto len = static_cast<std::size_t>(BlockingParams::mr) *
                     static_cast<std::size_t>(kc_padded);
    return {data.data() + static_cast<std::size_t>(s) * len, len};
  }
};

/// Packed B panel: slivers of nr columns stored row-major, k-padded.
/// Sliver s holds element (k, j) of columns [s*nr, s*nr+nr) at
/// data[s*nr*kc_padded + k*nr + j]; padding is zero.
struct PackedPanelB {
  std::vector<std::int8_t> data;
  int cols = 0;
  int kc = 0;
  int kc_padded = 0;
  int slivers = 0;

  std::span<const std::int8_t> sliver(int s) const {
    const auto len = static_cast<std::size_t>(BlockingParams::nr) *
                     static_cast<std::size_t>(kc_padded);
    return {data.data() + static_cast<std::size_t>(s) * len, len};
  }
};

/// Packs the window a[row0, row0+rows) x [col0, col0+cols); k positions
/// are padded up to a multiple of k_multiple.
PackedPanelA pack_a(const Matrix<std::int8_t>& a, std::int64_t row0, int rows,
                    std::int64_t col0, int cols, int k_multiple);

/// Packs the window b[row0, row0+rows) x [col0, col0+cols); the row
/// (k) extent is padded up to a multiple of k_multiple.
PackedPanelB pack_b(const Matrix<std::int8_t>& b, std::int64_t row0, int rows,
                    std::int64_t col0, int cols, int k_multiple);

struct MicroTile {
  std::array<std::int32_t, 16> c{};  // row-major 4x4
  bool overflow = false;
};

/// camp micro-kernel over one A sliver and one B sliver: kc/step
/// iterations of two register loads plus one instruction, one final
/// store. The tally records exactly that.
MicroTile micro_kernel_camp(std::span<const std::int8_t> a_sliver,
                            std::span<const std::int8_t> b_sliver,
                            int kc_padded, CampMode mode,
                            InstructionCounts& tally);

/// Modeled per-tile tally of the element-wise generic-vector baseline:
/// per k step one column load, four broadcasts and four multiply-adds;
/// the four partial-result registers are stored once per tile.
InstructionCounts micro_kernel_generic_model(int kc);

struct GemmOptions {
  BlockingParams blocking;
  bool strict_overflow = false;
  int threads = 0;  ///< 0: CAMPSIM_THREADS env, else hardware concurrency
};

struct GemmResult {
  Matrix<std::int32_t> c;
  InstructionCounts counts;
  bool overflow = false;
};

/// Blocked GeMM under the chosen backend. All backends produce the same
/// matrix as gemm_naive (32-bit wrapping semantics); they differ in the
/// modeled instruction stream. Throws on shape mismatch, on camp_i4
/// operands outside [-8, 7], and on overflow when strict_overflow is set.
GemmResult gemm_blocked(const Matrix<std::int8_t>& a,
                        const Matrix<std::int8_t>& b, Backend backend,
                        const GemmOptions& opts = {});

/// Textbook triple loop with exact wide accumulation, wrapped to int32
/// at the store. The oracle kernel.
Matrix<std::int32_t> gemm_naive(const Matrix<std::int8_t>& a,
                                const Matrix<std::int8_t>& b);

/// Data-independent count walk of the blocked loop nest; equals the
/// counts gemm_blocked reports for the same arguments.
InstructionCounts count_blocked(std::int64_t m, std::int64_t n, std::int64_t k,
                                Backend backend,
                                const BlockingParams& params = {});

}  // namespace campsim
