#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace campsim {

/// One GeMM problem (m x k times k x n) from a benchmark suite.
struct LayerShape {
  std::string benchmark;
  int layer_index = 0;  // 1-based
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::string label;  // sub-layer tag for LLM suites, empty otherwise

  std::int64_t macs() const { return m * n * k; }
};

/// Known suite names, in canonical order: the CNN/SMM tables plus the
/// derived LLM suites.
const std::vector<std::string>& suite_names();

/// Shapes of one suite. CNN and SMM suites are fixed tables; LLM suites
/// are derived from the model's hidden size h and head count with
/// sequence length seq: QKV/output projections (seq, h, h), attention
/// scores (seq, seq, h/heads), context (seq, h/heads, seq), and the
/// feed-forward pair (seq, 4h, h) and (seq, h, 4h).
std::vector<LayerShape> builtin_shapes(const std::string& suite, int seq = 128);

}  // namespace campsim
