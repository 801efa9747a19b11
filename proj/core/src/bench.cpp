#include "campsim/bench.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "campsim/analysis.hpp"

namespace campsim {

namespace {

std::uint64_t record_seed(std::uint64_t base, const LayerShape& shape,
                          Backend backend) {
  std::uint64_t h = fnv1a64(shape.benchmark);
  h = fnv1a64(std::to_string(shape.layer_index), h);
  h = fnv1a64(to_string(backend), h);
  return h ^ base;
}

std::int32_t oracle_cell(const Matrix<std::int8_t>& a,
                         const Matrix<std::int8_t>& b, std::int64_t i,
                         std::int64_t j) {
  std::int64_t acc = 0;
  for (std::int64_t kk = 0; kk < a.cols(); ++kk) {
    acc += static_cast<std::int64_t>(a(i, kk)) * b(kk, j);
  }
  return wrap_i32(acc);
}

[[noreturn]] void fail_verification(const LayerShape& shape, Backend backend,
                                    std::int64_t i, std::int64_t j) {
  std::ostringstream msg;
  msg << "oracle mismatch for " << shape.benchmark << " layer "
      << shape.layer_index << " (m=" << shape.m << ", n=" << shape.n
      << ", k=" << shape.k << ") backend " << to_string(backend) << " at ("
      << i << ", " << j << ")";
  throw VerificationError(msg.str());
}

// Full-matrix oracle below the size threshold, randomly sampled 4x4
// output tiles above it.
std::string verify_result(const Matrix<std::int8_t>& a,
                          const Matrix<std::int8_t>& b,
                          const Matrix<std::int32_t>& c,
                          const LayerShape& shape, Backend backend,
                          const BenchRequest& req, std::uint64_t seed) {
  if (shape.macs() <= req.full_oracle_threshold) {
    const Matrix<std::int32_t> expect = gemm_naive(a, b);
    for (std::int64_t i = 0; i < c.rows(); ++i) {
      for (std::int64_t j = 0; j < c.cols(); ++j) {
        if (c(i, j) != expect(i, j)) fail_verification(shape, backend, i, j);
      }
    }
    return "full";
  }
  SplitMix64 rng(seed ^ 0x5eed5a3d5eed5a3dull);
  for (int t = 0; t < req.sample_tiles; ++t) {
    const std::int64_t r0 = rng.next_in(0, std::max<std::int64_t>(c.rows() - 4, 0));
    const std::int64_t c0 = rng.next_in(0, std::max<std::int64_t>(c.cols() - 4, 0));
    for (std::int64_t i = r0; i < std::min(r0 + 4, c.rows()); ++i) {
      for (std::int64_t j = c0; j < std::min(c0 + 4, c.cols()); ++j) {
        if (c(i, j) != oracle_cell(a, b, i, j)) {
          fail_verification(shape, backend, i, j);
        }
      }
    }
  }
  return "sampled";
}

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << "0x" << std::hex << std::setfill('0') << std::setw(16) << v;
  return os.str();
}

std::uint64_t parse_hex64(const std::string& text) {
  return std::stoull(text, nullptr, 16);
}

// Shortest-exact double formatting for the CSV path.
std::string format_double(double v) {
  for (int prec = 1; prec <= 17; ++prec) {
    std::ostringstream os;
    os << std::setprecision(prec) << v;
    if (std::stod(os.str()) == v) return os.str();
  }
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

}  // namespace

ReportFormat report_format_from_string(std::string_view name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  throw std::invalid_argument("unknown report format: " + std::string(name));
}

std::uint64_t matrix_checksum(const Matrix<std::int32_t>& m) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto v = static_cast<std::uint32_t>(m.data()[i]);
    const std::uint8_t bytes[4] = {
        static_cast<std::uint8_t>(v & 0xFF),
        static_cast<std::uint8_t>((v >> 8) & 0xFF),
        static_cast<std::uint8_t>((v >> 16) & 0xFF),
        static_cast<std::uint8_t>((v >> 24) & 0xFF)};
    h = fnv1a64(std::span<const std::uint8_t>(bytes, 4), h);
  }
  return h;
}

Matrix<std::int8_t> random_operand(std::int64_t rows, std::int64_t cols,
                                   int lo, int hi, SplitMix64& rng) {
  Matrix<std::int8_t> m(rows, cols);
  for (std::size_t i = 0; i < m.size(); ++i) {
    m.data()[i] = static_cast<std::int8_t>(rng.next_in(lo, hi));
  }
  return m;
}

BenchReport run_bench(const BenchRequest& req) {
  if (req.suites.empty()) throw std::invalid_argument("bench: no suites");
  if (req.backends.empty()) throw std::invalid_argument("bench: no backends");
  if (req.configs.empty()) throw std::invalid_argument("bench: no cost configs");

  BenchReport report;
  report.seed = req.seed;
  report.version = kVersion;
  report.config_hash = cost_config_hash(req.configs);
  for (const CostConfig& cfg : req.configs) {
    report.config_names.push_back(cfg.name);
  }

  GemmOptions opts;
  opts.blocking = req.blocking;
  opts.threads = req.threads;

  for (const std::string& suite : req.suites) {
    for (const LayerShape& shape : builtin_shapes(suite, req.seq)) {
      for (const Backend backend : req.backends) {
        const std::uint64_t seed = record_seed(req.seed, shape, backend);
        SplitMix64 rng(seed);
        const bool narrow = backend == Backend::CampI4;
        const Matrix<std::int8_t> a = random_operand(
            shape.m, shape.k, narrow ? -8 : -128, narrow ? 7 : 127, rng);
        const Matrix<std::int8_t> b = random_operand(
            shape.k, shape.n, narrow ? -8 : -128, narrow ? 7 : 127, rng);

        const GemmResult result = gemm_blocked(a, b, backend, opts);

        BenchRecord record;
        record.shape = shape;
        record.backend = backend;
        record.verified =
            verify_result(a, b, result.c, shape, backend, req, seed);
        record.checksum = matrix_checksum(result.c);
        record.counts = result.counts;
        for (const CostConfig& cfg : req.configs) {
          record.cycles.emplace_back(cfg.name,
                                     model_cycles(result.counts, cfg));
        }
        if (const auto mode = backend_mode(backend)) {
          record.reduction_ratio =
              reduction_ratio(shape, *mode, req.blocking);
        }
        report.records.push_back(std::move(record));
      }
    }
  }
  return report;
}

namespace {

nlohmann::ordered_json record_to_json(const BenchRecord& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.shape.benchmark;
  j["layer"] = r.shape.layer_index;
  j["label"] = r.shape.label;
  j["m"] = r.shape.m;
  j["n"] = r.shape.n;
  j["k"] = r.shape.k;
  j["backend"] = to_string(r.backend);
  j["checksum"] = hex64(r.checksum);
  j["verified"] = r.verified;
  j["counts"] = {{"vec_loads", r.counts.vec_loads},
                 {"vec_stores", r.counts.vec_stores},
                 {"camp_ops", r.counts.camp_ops},
                 {"vec_alu_ops", r.counts.vec_alu_ops},
                 {"broadcast_ops", r.counts.broadcast_ops},
                 {"scalar_ops", r.counts.scalar_ops}};
  nlohmann::ordered_json cycles;
  for (const auto& [name, value] : r.cycles) cycles[name] = value;
  j["cycles"] = cycles;
  if (r.reduction_ratio) j["reduction_ratio"] = *r.reduction_ratio;
  return j;
}

BenchRecord record_from_json(const nlohmann::ordered_json& j) {
  BenchRecord r;
  r.shape.benchmark = j.at("suite").get<std::string>();
  r.shape.layer_index = j.at("layer").get<int>();
  r.shape.label = j.at("label").get<std::string>();
  r.shape.m = j.at("m").get<std::int64_t>();
  r.shape.n = j.at("n").get<std::int64_t>();
  r.shape.k = j.at("k").get<std::int64_t>();
  r.backend = backend_from_string(j.at("backend").get<std::string>());
  r.checksum = parse_hex64(j.at("checksum").get<std::string>());
  r.verified = j.at("verified").get<std::string>();
  const auto& counts = j.at("counts");
  r.counts.vec_loads = counts.at("vec_loads").get<std::uint64_t>();
  r.counts.vec_stores = counts.at("vec_stores").get<std::uint64_t>();
  r.counts.camp_ops = counts.at("camp_ops").get<std::uint64_t>();
  r.counts.vec_alu_ops = counts.at("vec_alu_ops").get<std::uint64_t>();
  r.counts.broadcast_ops = counts.at("broadcast_ops").get<std::uint64_t>();
  r.counts.scalar_ops = counts.at("scalar_ops").get<std::uint64_t>();
  for (const auto& [name, value] : j.at("cycles").items()) {
    r.cycles.emplace_back(name, value.get<std::uint64_t>());
  }
  if (j.contains("reduction_ratio")) {
    r.reduction_ratio = j.at("reduction_ratio").get<double>();
  }
  return r;
}

void emit_json(const BenchReport& report, std::ostream& os) {
  nlohmann::ordered_json doc;
  doc["meta"] = {{"seed", report.seed},
                 {"version", report.version},
                 {"config_hash", hex64(report.config_hash)},
                 {"configs", report.config_names}};
  doc["records"] = nlohmann::ordered_json::array();
  for (const BenchRecord& r : report.records) {
    doc["records"].push_back(record_to_json(r));
  }
  os << doc.dump(2) << '\n';
}

void emit_csv(const BenchReport& report, std::ostream& os) {
  os << "# campsim bench report\n";
  os << "# seed=" << report.seed << " version=" << report.version
     << " config_hash=" << hex64(report.config_hash) << '\n';
  os << "suite,layer,label,m,n,k,backend,checksum,verified,vec_loads,"
        "vec_stores,camp_ops,vec_alu_ops,broadcast_ops,scalar_ops";
  for (const std::string& name : report.config_names) {
    os << ",cycles_" << name;
  }
  os << ",reduction_ratio\n";
  for (const BenchRecord& r : report.records) {
    os << r.shape.benchmark << ',' << r.shape.layer_index << ','
       << r.shape.label << ',' << r.shape.m << ',' << r.shape.n << ','
       << r.shape.k << ',' << to_string(r.backend) << ',' << hex64(r.checksum)
       << ',' << r.verified << ',' << r.counts.vec_loads << ','
       << r.counts.vec_stores << ',' << r.counts.camp_ops << ','
       << r.counts.vec_alu_ops << ',' << r.counts.broadcast_ops << ','
       << r.counts.scalar_ops;
    for (const auto& [name, value] : r.cycles) {
      os << ',' << value;
    }
    os << ',' << (r.reduction_ratio ? format_double(*r.reduction_ratio) : "");
    os << '\n';
  }
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

BenchReport load_csv(std::istream& is, const std::string& path) {
  BenchReport report;
  std::string line;
  bool have_header = false;
  std::vector<std::string> header;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::stringstream meta(line.substr(1));
      std::string token;
      while (meta >> token) {
        if (token.rfind("seed=", 0) == 0) {
          report.seed = std::stoull(token.substr(5));
        } else if (token.rfind("version=", 0) == 0) {
          report.version = token.substr(8);
        } else if (token.rfind("config_hash=", 0) == 0) {
          report.config_hash = parse_hex64(token.substr(12));
        }
      }
      continue;
    }
    if (!have_header) {
      header = split_csv_line(line);
      for (const std::string& col : header) {
        if (col.rfind("cycles_", 0) == 0) {
          report.config_names.push_back(col.substr(7));
        }
      }
      have_header = true;
      continue;
    }
    const std::vector<std::string> cells = split_csv_line(line);
    if (cells.size() != header.size()) {
      throw std::runtime_error("malformed CSV row in " + path);
    }
    BenchRecord r;
    std::size_t c = 0;
    r.shape.benchmark = cells[c++];
    r.shape.layer_index = std::stoi(cells[c++]);
    r.shape.label = cells[c++];
    r.shape.m = std::stoll(cells[c++]);
    r.shape.n = std::stoll(cells[c++]);
    r.shape.k = std::stoll(cells[c++]);
    r.backend = backend_from_string(cells[c++]);
    r.checksum = parse_hex64(cells[c++]);
    r.verified = cells[c++];
    r.counts.vec_loads = std::stoull(cells[c++]);
    r.counts.vec_stores = std::stoull(cells[c++]);
    r.counts.camp_ops = std::stoull(cells[c++]);
    r.counts.vec_alu_ops = std::stoull(cells[c++]);
    r.counts.broadcast_ops = std::stoull(cells[c++]);
    r.counts.scalar_ops = std::stoull(cells[c++]);
    for (const std::string& name : report.config_names) {
      r.cycles.emplace_back(name, std::stoull(cells[c++]));
    }
    if (!cells[c].empty()) r.reduction_ratio = std::stod(cells[c]);
    report.records.push_back(std::move(r));
  }
  return report;
}

}  // namespace

void emit_report(const BenchReport& report, ReportFormat format,
                 const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open report for write: " + path);
  if (format == ReportFormat::Json) {
    emit_json(report, os);
  } else {
    emit_csv(report, os);
  }
  os.flush();
  if (!os) throw std::runtime_error("report write failed: " + path);
}

BenchReport load_report(const std::string& path, ReportFormat format) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open report: " + path);
  if (format == ReportFormat::Csv) return load_csv(is, path);

  nlohmann::ordered_json doc;
  try {
    is >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("bad report " + path + ": " + e.what());
  }
  BenchReport report;
  const auto& meta = doc.at("meta");
  report.seed = meta.at("seed").get<std::uint64_t>();
  report.version = meta.at("version").get<std::string>();
  report.config_hash = parse_hex64(meta.at("config_hash").get<std::string>());
  report.config_names =
      meta.at("configs").get<std::vector<std::string>>();
  for (const auto& rec : doc.at("records")) {
    report.records.push_back(record_from_json(rec));
  }
  return report;
}

}  // namespace campsim
