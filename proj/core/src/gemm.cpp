#include "campsim/gemm.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "parallel.hpp"

namespace campsim {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

int round_up(int v, int multiple) {
  return static_cast<int>(ceil_div(v, multiple)) * multiple;
}

std::int32_t wrap_add_i32(std::int32_t a, std::int32_t b, bool& overflow) {
  const std::int64_t exact = static_cast<std::int64_t>(a) + b;
  if (exact < std::numeric_limits<std::int32_t>::min() ||
      exact > std::numeric_limits<std::int32_t>::max()) {
    overflow = true;
  }
  return wrap_i32(exact);
}

void require_i4_range(const Matrix<std::int8_t>& m, const char* which) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    const int v = m.data()[i];
    if (v < -8 || v > 7) {
      throw std::out_of_range(std::string("camp_i4 operand ") + which +
                              " has element " + std::to_string(v) +
                              " outside [-8, 7]");
    }
  }
}

// Element-wise 4x4 kernel used by the generic-vector backend; the values
// match the camp kernel, only the modeled instruction stream differs.
MicroTile micro_kernel_elementwise(std::span<const std::int8_t> a_sliver,
                                   std::span<const std::int8_t> b_sliver,
                                   int kc) {
  MicroTile out;
  std::int64_t acc[16] = {};
  for (int k = 0; k < kc; ++k) {
    const std::int8_t* a_col = a_sliver.data() + static_cast<std::size_t>(4 * k);
    const std::int8_t* b_row = b_sliver.data() + static_cast<std::size_t>(4 * k);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        acc[4 * i + j] += static_cast<std::int64_t>(a_col[i]) * b_row[j];
      }
    }
  }
  for (int idx = 0; idx < 16; ++idx) {
    if (acc[idx] < std::numeric_limits<std::int32_t>::min() ||
        acc[idx] > std::numeric_limits<std::int32_t>::max()) {
      out.overflow = true;
    }
    out.c[static_cast<std::size_t>(idx)] = wrap_i32(acc[idx]);
  }
  return out;
}

struct BlockedEngine {
  const Matrix<std::int8_t>& a;
  const Matrix<std::int8_t>& b;
  Backend backend;
  const BlockingParams& params;
  int threads;

  Matrix<std::int32_t> c;
  InstructionCounts counts;
  bool overflow = false;

  BlockedEngine(const Matrix<std::int8_t>& a_, const Matrix<std::int8_t>& b_,
                Backend backend_, const BlockingParams& params_, int threads_)
      : a(a_), b(b_), backend(backend_), params(params_), threads(threads_),
        c(a_.rows(), b_.cols()) {}

  void run() {
    const std::int64_t m = a.rows();
    const std::int64_t k = a.cols();
    const std::int64_t n = b.cols();
    const auto mode = backend_mode(backend);
    const int step = mode ? k_step(*mode) : 1;

    for (std::int64_t jc0 = 0; jc0 < n; jc0 += params.nc) {
      const int nc_eff = static_cast<int>(std::min<std::int64_t>(params.nc, n - jc0));
      for (std::int64_t pc0 = 0; pc0 < k; pc0 += params.kc) {
        const int kc_eff = static_cast<int>(std::min<std::int64_t>(params.kc, k - pc0));
        const PackedPanelB pb = pack_b(b, pc0, kc_eff, jc0, nc_eff, step);

        const std::int64_t ic_blocks = ceil_div(m, params.mc);
        std::vector<PackedPanelA> pas(static_cast<std::size_t>(ic_blocks));
        detail::parallel_for(threads, ic_blocks, [&](std::int64_t ib) {
          const std::int64_t ic0 = ib * params.mc;
          const int mc_eff =
              static_cast<int>(std::min<std::int64_t>(params.mc, m - ic0));
          pas[static_cast<std::size_t>(ib)] =
              pack_a(a, ic0, mc_eff, pc0, kc_eff, step);
        });

        // One task per (A panel, B sliver) pair; all write disjoint C tiles.
        const std::int64_t tasks = ic_blocks * pb.slivers;
        std::vector<InstructionCounts> task_counts(static_cast<std::size_t>(tasks));
        std::vector<std::uint8_t> task_overflow(static_cast<std::size_t>(tasks), 0);
        detail::parallel_for(threads, tasks, [&](std::int64_t t) {
          const std::int64_t ib = t / pb.slivers;
          const int jr = static_cast<int>(t % pb.slivers);
          const PackedPanelA& pa = pas[static_cast<std::size_t>(ib)];
          const std::int64_t ic0 = ib * params.mc;
          const std::int64_t jc_base = jc0 + static_cast<std::int64_t>(4) * jr;
          auto& tally = task_counts[static_cast<std::size_t>(t)];
          bool task_ovf = false;
          for (int ir = 0; ir < pa.slivers; ++ir) {
            MicroTile tile;
            if (mode) {
              tile = micro_kernel_camp(pa.sliver(ir), pb.sliver(jr),
                                       pa.kc_padded, *mode, tally);
            } else {
              tile = micro_kernel_elementwise(pa.sliver(ir), pb.sliver(jr),
                                              pa.kc_padded);
              tally += micro_kernel_generic_model(pa.kc_padded);
            }
            task_ovf |= tile.overflow;
            const std::int64_t r0 = ic0 + static_cast<std::int64_t>(4) * ir;
            const int rmax = static_cast<int>(std::min<std::int64_t>(4, m - r0));
            const int cmax =
                static_cast<int>(std::min<std::int64_t>(4, n - jc_base));
            for (int i = 0; i < rmax; ++i) {
              for (int j = 0; j < cmax; ++j) {
                c(r0 + i, jc_base + j) = wrap_add_i32(
                    c(r0 + i, jc_base + j),
                    tile.c[static_cast<std::size_t>(4 * i + j)], task_ovf);
              }
            }
          }
          task_overflow[static_cast<std::size_t>(t)] = task_ovf ? 1 : 0;
        });
        for (std::int64_t t = 0; t < tasks; ++t) {
          counts += task_counts[static_cast<std::size_t>(t)];
          overflow |= task_overflow[static_cast<std::size_t>(t)] != 0;
        }
      }
    }
  }
};

}  // namespace

void BlockingParams::validate() const {
  if (nc <= 0 || kc <= 0 || mc <= 0) {
    throw std::invalid_argument("blocking parameters must be positive");
  }
}

int k_step(CampMode mode) { return mode == CampMode::Int8 ? 16 : 32; }

Backend backend_from_string(std::string_view name) {
  if (name == "camp_i8") return Backend::CampI8;
  if (name == "camp_i4") return Backend::CampI4;
  if (name == "naive_i32") return Backend::NaiveI32;
  if (name == "generic_vec_model") return Backend::GenericVecModel;
  throw std::invalid_argument("unknown backend: " + std::string(name));
}

const char* to_string(Backend backend) {
  switch (backend) {
    case Backend::CampI8: return "camp_i8";
    case Backend::CampI4: return "camp_i4";
    case Backend::NaiveI32: return "naive_i32";
    case Backend::GenericVecModel: return "generic_vec_model";
  }
  return "?";
}

std::optional<CampMode> backend_mode(Backend backend) {
  if (backend == Backend::CampI8) return CampMode::Int8;
  if (backend == Backend::CampI4) return CampMode::Int4;
  return std::nullopt;
}

PackedPanelA pack_a(const Matrix<std::int8_t>& a, std::int64_t row0, int rows,
                    std::int64_t col0, int cols, int k_multiple) {
  if (rows < 0 || cols < 0 || k_multiple <= 0) {
    throw std::invalid_argument("pack_a: bad window");
  }
  PackedPanelA p;
  p.rows = rows;
  p.kc = cols;
  p.kc_padded = round_up(std::max(cols, 1), k_multiple);
  p.slivers = static_cast<int>(ceil_div(rows, BlockingParams::mr));
  p.data.assign(static_cast<std::size_t>(p.slivers) * BlockingParams::mr *
                    static_cast<std::size_t>(p.kc_padded),
                0);
  for (int s = 0; s < p.slivers; ++s) {
    std::int8_t* sliver = p.data.data() + static_cast<std::size_t>(s) *
                                              BlockingParams::mr *
                                              static_cast<std::size_t>(p.kc_padded);
    for (int kk = 0; kk < cols; ++kk) {
      for (int i = 0; i < BlockingParams::mr; ++i) {
        const int r = s * BlockingParams::mr + i;
        sliver[static_cast<std::size_t>(kk * BlockingParams::mr + i)] =
            r < rows ? a(row0 + r, col0 + kk) : std::int8_t{0};
      }
    }
  }
  return p;
}

PackedPanelB pack_b(const Matrix<std::int8_t>& b, std::int64_t row0, int rows,
                    std::int64_t col0, int cols, int k_multiple) {
  if (rows < 0 || cols < 0 || k_multiple <= 0) {
    throw std::invalid_argument("pack_b: bad window");
  }
  PackedPanelB p;
  p.cols = cols;
  p.kc = rows;
  p.kc_padded = round_up(std::max(rows, 1), k_multiple);
  p.slivers = static_cast<int>(ceil_div(cols, BlockingParams::nr));
  p.data.assign(static_cast<std::size_t>(p.slivers) * BlockingParams::nr *
                    static_cast<std::size_t>(p.kc_padded),
                0);
  for (int s = 0; s < p.slivers; ++s) {
    std::int8_t* sliver = p.data.data() + static_cast<std::size_t>(s) *
                                              BlockingParams::nr *
                                              static_cast<std::size_t>(p.kc_padded);
    for (int kk = 0; kk < rows; ++kk) {
      for (int j = 0; j < BlockingParams::nr; ++j) {
        const int col = s * BlockingParams::nr + j;
        sliver[static_cast<std::size_t>(kk * BlockingParams::nr + j)] =
            col < cols ? b(row0 + kk, col0 + col) : std::int8_t{0};
      }
    }
  }
  return p;
}

MicroTile micro_kernel_camp(std::span<const std::int8_t> a_sliver,
                            std::span<const std::int8_t> b_sliver,
                            int kc_padded, CampMode mode,
                            InstructionCounts& tally) {
  const int step = k_step(mode);
  if (kc_padded <= 0 || kc_padded % step != 0) {
    throw std::invalid_argument("micro_kernel_camp: kc " +
                                std::to_string(kc_padded) +
                                " is not a multiple of the k-step " +
                                std::to_string(step));
  }
  const auto expected = static_cast<std::size_t>(4) *
                        static_cast<std::size_t>(kc_padded);
  if (a_sliver.size() != expected || b_sliver.size() != expected) {
    throw std::invalid_argument("micro_kernel_camp: sliver extent mismatch");
  }

  const int iters = kc_padded / step;
  const int chunk = 4 * step;  // elements consumed per register load
  VecReg512 acc;               // auxiliary accumulator, starts at zero
  bool overflow = false;
  for (int t = 0; t < iters; ++t) {
    const auto offset = static_cast<std::size_t>(t) *
                        static_cast<std::size_t>(chunk);
    const std::span<const std::int8_t> a_chunk =
        a_sliver.subspan(offset, static_cast<std::size_t>(chunk));
    const std::span<const std::int8_t> b_chunk =
        b_sliver.subspan(offset, static_cast<std::size_t>(chunk));
    const VecReg512 vr1 =
        mode == CampMode::Int8 ? pack_i8(a_chunk) : pack_i4(a_chunk);
    const VecReg512 vr2 =
        mode == CampMode::Int8 ? pack_i8(b_chunk) : pack_i4(b_chunk);
    const CampResult res = camp_exec(acc, vr1, vr2, mode);
    acc = res.vr0;
    overflow |= res.overflow_flag;
  }
  tally.vec_loads += static_cast<std::uint64_t>(2 * iters);
  tally.camp_ops += static_cast<std::uint64_t>(iters);
  tally.vec_stores += 1;

  MicroTile out;
  out.c = unpack_i32(acc);
  out.overflow = overflow;
  return out;
}

InstructionCounts micro_kernel_generic_model(int kc) {
  if (kc <= 0) throw std::invalid_argument("generic model: kc must be positive");
  InstructionCounts counts;
  counts.vec_loads = static_cast<std::uint64_t>(kc);
  counts.broadcast_ops = static_cast<std::uint64_t>(4 * kc);
  counts.vec_alu_ops = static_cast<std::uint64_t>(4 * kc);
  counts.vec_stores = 4;
  return counts;
}

GemmResult gemm_blocked(const Matrix<std::int8_t>& a,
                        const Matrix<std::int8_t>& b, Backend backend,
                        const GemmOptions& opts) {
  opts.blocking.validate();
  if (a.cols() != b.rows()) {
    throw std::invalid_argument(
        "gemm: shape mismatch, A is " + std::to_string(a.rows()) + "x" +
        std::to_string(a.cols()) + " but B is " + std::to_string(b.rows()) +
        "x" + std::to_string(b.cols()));
  }
  if (backend == Backend::CampI4) {
    require_i4_range(a, "A");
    require_i4_range(b, "B");
  }

  GemmResult result{Matrix<std::int32_t>(a.rows(), b.cols()), {}, false};
  if (a.rows() == 0 || b.cols() == 0 || a.cols() == 0) return result;

  if (backend == Backend::NaiveI32) {
    result.c = gemm_naive(a, b);
    result.counts.scalar_ops = static_cast<std::uint64_t>(a.rows()) *
                               static_cast<std::uint64_t>(a.cols()) *
                               static_cast<std::uint64_t>(b.cols());
    return result;
  }

  BlockedEngine engine(a, b, backend, opts.blocking,
                       detail::resolve_threads(opts.threads));
  engine.run();
  result.c = std::move(engine.c);
  result.counts = engine.counts;
  result.overflow = engine.overflow;
  if (result.overflow && opts.strict_overflow) {
    throw std::overflow_error("gemm: 32-bit accumulator overflow");
  }
  return result;
}

Matrix<std::int32_t> gemm_naive(const Matrix<std::int8_t>& a,
                                const Matrix<std::int8_t>& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("gemm_naive: shape mismatch");
  }
  Matrix<std::int32_t> c(a.rows(), b.cols());
  for (std::int64_t i = 0; i < a.rows(); ++i) {
    for (std::int64_t j = 0; j < b.cols(); ++j) {
      std::int64_t acc = 0;
      for (std::int64_t kk = 0; kk < a.cols(); ++kk) {
        acc += static_cast<std::int64_t>(a(i, kk)) * b(kk, j);
      }
      c(i, j) = wrap_i32(acc);
    }
  }
  return c;
}

InstructionCounts count_blocked(std::int64_t m, std::int64_t n, std::int64_t k,
                                Backend backend, const BlockingParams& params) {
  params.validate();
  InstructionCounts counts;
  if (m <= 0 || n <= 0 || k <= 0) return counts;

  if (backend == Backend::NaiveI32) {
    counts.scalar_ops = static_cast<std::uint64_t>(m) *
                        static_cast<std::uint64_t>(n) *
                        static_cast<std::uint64_t>(k);
    return counts;
  }

  const auto mode = backend_mode(backend);
  const int step = mode ? k_step(*mode) : 1;
  for (std::int64_t jc0 = 0; jc0 < n; jc0 += params.nc) {
    const std::int64_t nc_eff = std::min<std::int64_t>(params.nc, n - jc0);
    for (std::int64_t pc0 = 0; pc0 < k; pc0 += params.kc) {
      const auto kc_eff =
          static_cast<int>(std::min<std::int64_t>(params.kc, k - pc0));
      const int kc_pad = round_up(kc_eff, step);
      for (std::int64_t ic0 = 0; ic0 < m; ic0 += params.mc) {
        const std::int64_t mc_eff = std::min<std::int64_t>(params.mc, m - ic0);
        const std::uint64_t tiles =
            static_cast<std::uint64_t>(ceil_div(mc_eff, BlockingParams::mr)) *
            static_cast<std::uint64_t>(ceil_div(nc_eff, BlockingParams::nr));
        if (mode) {
          const auto iters = static_cast<std::uint64_t>(kc_pad / step);
          counts.vec_loads += tiles * 2 * iters;
          counts.camp_ops += tiles * iters;
          counts.vec_stores += tiles;
        } else {
          InstructionCounts per_tile = micro_kernel_generic_model(kc_pad);
          counts.vec_loads += tiles * per_tile.vec_loads;
          counts.vec_stores += tiles * per_tile.vec_stores;
          counts.broadcast_ops += tiles * per_tile.broadcast_ops;
          counts.vec_alu_ops += tiles * per_tile.vec_alu_ops;
        }
      }
    }
  }
  return counts;
}

}  // namespace campsim
