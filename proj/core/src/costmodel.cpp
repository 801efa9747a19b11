#include "campsim/costmodel.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "campsim/common.hpp"

namespace campsim {

std::uint64_t model_cycles(const InstructionCounts& counts,
                           const CostConfig& cfg) {
  return counts.vec_loads * cfg.load_cost + counts.vec_stores * cfg.store_cost +
         counts.camp_ops * cfg.camp_latency_cycles +
         (counts.vec_alu_ops + counts.broadcast_ops + counts.scalar_ops) *
             cfg.alu_cost;
}

const std::vector<CostConfig>& default_cost_configs() {
  static const std::vector<CostConfig> kConfigs = {
      {"64clk", 64, 1, 1, 1, 1.0},
      {"32clk", 32, 1, 1, 1, 1.8},
      {"16clk", 16, 1, 1, 1, 3.1},
      {"8clk", 8, 1, 1, 1, 4.5},
      {"4clk", 4, 1, 1, 1, 5.8},
  };
  return kConfigs;
}

CostConfig cost_config_preset(const std::string& name) {
  for (const CostConfig& cfg : default_cost_configs()) {
    if (cfg.name == name) return cfg;
  }
  throw std::invalid_argument("unknown cost config preset: " + name);
}

std::vector<CostConfig> load_cost_configs(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open cost config: " + path);
  nlohmann::json doc;
  try {
    is >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("bad cost config " + path + ": " + e.what());
  }
  if (!doc.is_array()) {
    throw std::runtime_error("cost config must be a JSON array: " + path);
  }
  std::vector<CostConfig> configs;
  for (const auto& item : doc) {
    CostConfig cfg;
    cfg.name = item.at("name").get<std::string>();
    cfg.camp_latency_cycles = item.at("camp_latency_cycles").get<std::uint64_t>();
    cfg.load_cost = item.value("load_cost", std::uint64_t{1});
    cfg.store_cost = item.value("store_cost", std::uint64_t{1});
    cfg.alu_cost = item.value("alu_cost", std::uint64_t{1});
    cfg.reference_speedup = item.value("reference_speedup", 0.0);
    if (cfg.camp_latency_cycles == 0) {
      throw std::runtime_error("camp_latency_cycles must be positive in " +
                               cfg.name);
    }
    configs.push_back(std::move(cfg));
  }
  if (configs.empty()) {
    throw std::runtime_error("cost config lists no configurations: " + path);
  }
  return configs;
}

std::uint64_t cost_config_hash(const std::vector<CostConfig>& configs) {
  std::ostringstream canonical;
  for (const CostConfig& cfg : configs) {
    canonical << cfg.name << ':' << cfg.camp_latency_cycles << ':'
              << cfg.load_cost << ':' << cfg.store_cost << ':' << cfg.alu_cost
              << ';';
  }
  return fnv1a64(canonical.str());
}

}  // namespace campsim
