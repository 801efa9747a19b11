#include "campsim/shapes.hpp"

#include <array>
#include <stdexcept>

namespace campsim {

namespace {

struct Mnk {
  std::int64_t m, n, k;
};

std::vector<LayerShape> table(const std::string& name,
                              std::initializer_list<Mnk> rows) {
  std::vector<LayerShape> shapes;
  int index = 1;
  for (const Mnk& r : rows) {
    shapes.push_back({name, index++, r.m, r.n, r.k, ""});
  }
  return shapes;
}

struct LlmConfig {
  std::int64_t hidden;
  std::int64_t heads;
};

std::vector<LayerShape> llm_shapes(const std::string& name, LlmConfig cfg,
                                   int seq) {
  if (seq <= 0) throw std::invalid_argument("sequence length must be positive");
  const std::int64_t s = seq;
  const std::int64_t h = cfg.hidden;
  const std::int64_t d = cfg.hidden / cfg.heads;
  std::vector<LayerShape> shapes = {
      {name, 1, s, h, h, "sa_qkv_proj"},
      {name, 2, s, s, d, "sa_scores"},
      {name, 3, s, d, s, "sa_context"},
      {name, 4, s, h, h, "sa_out_proj"},
      {name, 5, s, 4 * h, h, "ff_expand"},
      {name, 6, s, h, 4 * h, "ff_reduce"},
  };
  return shapes;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> kNames = {
      "alexnet", "smm",       "resnet",     "vgg",        "mobilenet",
      "bert-base", "bert-large", "gpt2-large", "gpt3-small"};
  return kNames;
}

std::vector<LayerShape> builtin_shapes(const std::string& suite, int seq) {
  if (suite == "alexnet") {
    return table(suite, {{169, 256, 3456},
                         {169, 384, 2304},
                         {169, 384, 3456},
                         {3025, 96, 363},
                         {729, 256, 2400}});
  }
  if (suite == "smm") {
    return table(suite, {{32, 32, 32},
                         {64, 64, 64},
                         {128, 128, 128},
                         {256, 256, 256},
                         {512, 512, 512},
                         {1024, 1024, 1024}});
  }
  if (suite == "resnet") {
    return table(suite, {{12544, 64, 147},
                         {196, 256, 1152},
                         {196, 256, 2304},
                         {3136, 64, 576},
                         {49, 512, 2304},
                         {49, 512, 4608},
                         {784, 128, 1152},
                         {784, 128, 576}});
  }
  if (suite == "vgg") {
    return table(suite, {{12544, 128, 1152},
                         {12544, 128, 576},
                         {196, 512, 4608},
                         {3136, 256, 1152},
                         {3136, 256, 2304},
                         {50176, 64, 27},
                         {50176, 64, 576},
                         {784, 512, 2304},
                         {784, 512, 4608}});
  }
  if (suite == "mobilenet") {
    return table(suite, {{2544, 32, 27},
                         {12544, 64, 32},
                         {196, 512, 256},
                         {196, 512, 512},
                         {3136, 128, 128},
                         {3136, 128, 64},
                         {49, 1024, 1024},
                         {49, 1024, 512},
                         {784, 256, 128},
                         {784, 256, 256}});
  }
  if (suite == "bert-base") return llm_shapes(suite, {768, 12}, seq);
  if (suite == "bert-large") return llm_shapes(suite, {1024, 16}, seq);
  if (suite == "gpt2-large") return llm_shapes(suite, {1280, 20}, seq);
  if (suite == "gpt3-small") return llm_shapes(suite, {768, 12}, seq);
  throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace campsim
