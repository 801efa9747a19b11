#include "campsim/analysis.hpp"

#include <stdexcept>

namespace campsim {

double reduction_ratio(const LayerShape& shape, CampMode mode,
                       const BlockingParams& params) {
  if (shape.m <= 0 || shape.n <= 0 || shape.k <= 0) {
    throw std::invalid_argument("reduction_ratio: extents must be positive");
  }
  const InstructionCounts generic = count_blocked(
      shape.m, shape.n, shape.k, Backend::GenericVecModel, params);
  const Backend camp =
      mode == CampMode::Int8 ? Backend::CampI8 : Backend::CampI4;
  const InstructionCounts ours =
      count_blocked(shape.m, shape.n, shape.k, camp, params);
  return static_cast<double>(generic.vector_total()) /
         static_cast<double>(ours.vector_total());
}

std::vector<DesignSpaceRow> design_space_report(
    const LayerShape& shape, CampMode mode,
    const std::vector<CostConfig>& configs, const BlockingParams& params) {
  if (configs.empty()) {
    throw std::invalid_argument("design_space_report: no configurations");
  }
  const Backend camp =
      mode == CampMode::Int8 ? Backend::CampI8 : Backend::CampI4;
  const InstructionCounts counts =
      count_blocked(shape.m, shape.n, shape.k, camp, params);

  std::vector<DesignSpaceRow> rows;
  rows.reserve(configs.size());
  for (const CostConfig& cfg : configs) {
    rows.push_back({cfg, model_cycles(counts, cfg), 1.0});
  }
  const auto baseline = static_cast<double>(rows.front().cycles);
  for (DesignSpaceRow& row : rows) {
    row.speedup_vs_64clk = baseline / static_cast<double>(row.cycles);
  }
  return rows;
}

}  // namespace campsim
