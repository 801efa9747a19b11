#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace campsim {

/// Modeled instruction tallies for one GeMM run. For a fixed
/// shape/backend/blocking the counts are data-value independent.
struct InstructionCounts {
  std::uint64_t vec_loads = 0;
  std::uint64_t vec_stores = 0;
  std::uint64_t camp_ops = 0;
  std::uint64_t vec_alu_ops = 0;
  std::uint64_t broadcast_ops = 0;
  std::uint64_t scalar_ops = 0;

  InstructionCounts& operator+=(const InstructionCounts& o) {
    vec_loads += o.vec_loads;
    vec_stores += o.vec_stores;
    camp_ops += o.camp_ops;
    vec_alu_ops += o.vec_alu_ops;
    broadcast_ops += o.broadcast_ops;
    scalar_ops += o.scalar_ops;
    return *this;
  }

  /// Total vector instructions (scalar_ops excluded).
  std::uint64_t vector_total() const {
    return vec_loads + vec_stores + camp_ops + vec_alu_ops + broadcast_ops;
  }

  friend bool operator==(const InstructionCounts&,
                         const InstructionCounts&) = default;
};

/// One point of the accumulator-array design space. The five presets
/// trade accumulator count for instruction latency (64clk down to 4clk);
/// reference_speedup carries the published full-system numbers purely as
/// labeled reference data, never as expected model output.
struct CostConfig {
  std::string name;
  std::uint64_t camp_latency_cycles = 64;
  std::uint64_t load_cost = 1;
  std::uint64_t store_cost = 1;
  std::uint64_t alu_cost = 1;
  double reference_speedup = 1.0;
};

/// Linear non-pipelined issue model: cycles = sum of count * cost.
/// Broadcast and scalar ops are costed at alu_cost.
std::uint64_t model_cycles(const InstructionCounts& counts,
                           const CostConfig& cfg);

/// The five named presets: 64clk, 32clk, 16clk, 8clk, 4clk.
const std::vector<CostConfig>& default_cost_configs();

/// Look up a preset by name.
CostConfig cost_config_preset(const std::string& name);

/// Loads configs from a JSON file: an array of objects with keys
/// name, camp_latency_cycles, load_cost, store_cost, alu_cost and
/// optional reference_speedup.
std::vector<CostConfig> load_cost_configs(const std::string& path);

/// Hash over the canonical serialization of a config list; recorded in
/// bench report metadata.
std::uint64_t cost_config_hash(const std::vector<CostConfig>& configs);

}  // namespace campsim
