#pragma once

#include <cstdint>
#include <vector>

#include "campsim/costmodel.hpp"
#include "campsim/gemm.hpp"
#include "campsim/shapes.hpp"

namespace campsim {

/// Vector-instruction reduction of the camp backend over the element-wise
/// generic-vector baseline: total modeled vector instructions of the
/// generic blocked run divided by the camp blocked run, for one shape.
/// Shape-only; independent of matrix values.
double reduction_ratio(const LayerShape& shape, CampMode mode = CampMode::Int8,
                       const BlockingParams& params = {});

struct DesignSpaceRow {
  CostConfig config;
  std::uint64_t cycles = 0;
  double speedup_vs_64clk = 1.0;
};

/// Modeled cycles of the camp backend for one shape under each cost
/// configuration, with speedups normalized to the first (64clk) row.
/// config.reference_speedup carries the published full-system values as
/// labeled reference data only; the model makes no claim of matching them.
std::vector<DesignSpaceRow> design_space_report(
    const LayerShape& shape, CampMode mode = CampMode::Int8,
    const std::vector<CostConfig>& configs = default_cost_configs(),
    const BlockingParams& params = {});

}  // namespace campsim
