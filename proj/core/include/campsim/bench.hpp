#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "campsim/common.hpp"
#include "campsim/costmodel.hpp"
#include "campsim/gemm.hpp"
#include "campsim/shapes.hpp"

namespace campsim {

/// Raised when a benchmark record fails its oracle check; the message
/// names the offending shape.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ReportFormat { Json, Csv };
ReportFormat report_format_from_string(std::string_view name);

struct BenchRequest {
  std::vector<std::string> suites;
  std::vector<Backend> backends;
  std::vector<CostConfig> configs = default_cost_configs();
  std::uint64_t seed = 0;
  int seq = 128;  ///< sequence length for the derived LLM suites
  /// Shapes with m*n*k at or below this run the full oracle; larger ones
  /// are checked on randomly sampled output tiles.
  std::int64_t full_oracle_threshold = std::int64_t{1} << 24;
  int sample_tiles = 16;
  BlockingParams blocking;
  int threads = 0;
};

struct BenchRecord {
  LayerShape shape;
  Backend backend = Backend::CampI8;
  std::uint64_t checksum = 0;
  std::string verified;  // "full" or "sampled"
  InstructionCounts counts;
  std::vector<std::pair<std::string, std::uint64_t>> cycles;  // per config
  std::optional<double> reduction_ratio;  // camp backends only

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

struct BenchReport {
  std::uint64_t seed = 0;
  std::string version;
  std::uint64_t config_hash = 0;
  std::vector<std::string> config_names;
  std::vector<BenchRecord> records;

  friend bool operator==(const BenchReport&, const BenchReport&) = default;
};

/// Runs every (shape, backend) pair of the request on seeded random
/// operands, verifies each result against the naive oracle, and collects
/// counts, modeled cycles and reduction ratios. Record order is
/// canonical (suite, layer, backend); the report is a deterministic
/// function of the request.
BenchReport run_bench(const BenchRequest& req);

void emit_report(const BenchReport& report, ReportFormat format,
                 const std::string& path);
BenchReport load_report(const std::string& path, ReportFormat format);

/// FNV-1a over the little-endian int32 image of the matrix.
std::uint64_t matrix_checksum(const Matrix<std::int32_t>& m);

/// Uniform random operand matrix over [lo, hi].
Matrix<std::int8_t> random_operand(std::int64_t rows, std::int64_t cols,
                                   int lo, int hi, SplitMix64& rng);

}  // namespace campsim
