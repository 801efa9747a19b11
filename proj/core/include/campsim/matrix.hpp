#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace campsim {

/// Dense row-major matrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::int64_t rows, std::int64_t cols, T fill = T{})
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows * cols), fill) {
    if (rows < 0 || cols < 0) {
      throw std::invalid_argument("matrix extents must be non-negative");
    }
  }

  std::int64_t rows() const { return rows_; }
  std::int64_t cols() const { return cols_; }

  T& operator()(std::int64_t r, std::int64_t c) {
    return data_[static_cast<std::size_t>(r * cols_ + c)];
  }
  const T& operator()(std::int64_t r, std::int64_t c) const {
    return data_[static_cast<std::size_t>(r * cols_ + c)];
  }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }
  std::size_t size() const { return data_.size(); }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::int64_t rows_ = 0;
  std::int64_t cols_ = 0;
  std::vector<T> data_;
};

// Fixture I/O.
//
// Binary layout (all little-endian): magic "CSM1" (4 bytes), uint32 rows,
// uint32 cols, uint32 element size in bytes, then rows*cols elements
// row-major, each element little-endian two's complement.
// CSV: one row per line, comma-separated decimal integers.

namespace detail {

inline void put_u32_le(std::ostream& os, std::uint32_t v) {
  const char bytes[4] = {
      static_cast<char>(v & 0xFF), static_cast<char>((v >> 8) & 0xFF),
      static_cast<char>((v >> 16) & 0xFF), static_cast<char>((v >> 24) & 0xFF)};
  os.write(bytes, 4);
}

inline std::uint32_t get_u32_le(std::istream& is) {
  unsigned char bytes[4];
  is.read(reinterpret_cast<char*>(bytes), 4);
  if (!is) throw std::runtime_error("truncated matrix file header");
  return static_cast<std::uint32_t>(bytes[0]) |
         (static_cast<std::uint32_t>(bytes[1]) << 8) |
         (static_cast<std::uint32_t>(bytes[2]) << 16) |
         (static_cast<std::uint32_t>(bytes[3]) << 24);
}

}  // namespace detail

template <typename T>
void save_binary(const Matrix<T>& m, const std::string& path) {
  static_assert(std::is_integral_v<T>);
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for write: " + path);
  os.write("CSM1", 4);
  detail::put_u32_le(os, static_cast<std::uint32_t>(m.rows()));
  detail::put_u32_le(os, static_cast<std::uint32_t>(m.cols()));
  detail::put_u32_le(os, sizeof(T));
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto v = static_cast<std::uint64_t>(
        static_cast<std::make_unsigned_t<T>>(m.data()[i]));
    for (std::size_t b = 0; b < sizeof(T); ++b) {
      os.put(static_cast<char>((v >> (8 * b)) & 0xFF));
    }
  }
  if (!os) throw std::runtime_error("write failed: " + path);
}

template <typename T>
Matrix<T> load_binary(const std::string& path) {
  static_assert(std::is_integral_v<T>);
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open: " + path);
  char magic[4];
  is.read(magic, 4);
  if (!is || std::string_view(magic, 4) != "CSM1") {
    throw std::runtime_error("bad matrix magic in " + path);
  }
  const auto rows = detail::get_u32_le(is);
  const auto cols = detail::get_u32_le(is);
  const auto elem = detail::get_u32_le(is);
  if (elem != sizeof(T)) {
    throw std::runtime_error("element size mismatch in " + path);
  }
  Matrix<T> m(rows, cols);
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::uint64_t v = 0;
    for (std::size_t b = 0; b < sizeof(T); ++b) {
      const int c = is.get();
      if (c == EOF) throw std::runtime_error("truncated matrix data in " + path);
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << (8 * b);
    }
    m.data()[i] = static_cast<T>(static_cast<std::make_unsigned_t<T>>(v));
  }
  return m;
}

template <typename T>
void save_csv(const Matrix<T>& m, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for write: " + path);
  for (std::int64_t r = 0; r < m.rows(); ++r) {
    for (std::int64_t c = 0; c < m.cols(); ++c) {
      if (c) os << ',';
      os << static_cast<std::int64_t>(m(r, c));
    }
    os << '\n';
  }
}

template <typename T>
Matrix<T> load_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open: " + path);
  std::vector<std::vector<T>> rows;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<T> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      row.push_back(static_cast<T>(std::stoll(cell)));
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw std::runtime_error("ragged CSV row in " + path);
    }
    rows.push_back(std::move(row));
  }
  Matrix<T> m(static_cast<std::int64_t>(rows.size()),
              rows.empty() ? 0 : static_cast<std::int64_t>(rows.front().size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      m(static_cast<std::int64_t>(r), static_cast<std::int64_t>(c)) = rows[r][c];
    }
  }
  return m;
}

}  // namespace campsim
