#include "campsim/quantize.hpp"

#include <cmath>
#include <stdexcept>

namespace campsim {

void QuantParams::validate() const {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw std::invalid_argument("quantizer scale must be positive and finite");
  }
}

double round_half_to_even(double v) {
  double floor_v = std::floor(v);
  const double frac = v - floor_v;
  if (frac > 0.5) return floor_v + 1.0;
  if (frac < 0.5) return floor_v;
  // Exact tie: pick the even neighbour.
  return std::fmod(floor_v, 2.0) == 0.0 ? floor_v : floor_v + 1.0;
}

Matrix<std::int8_t> quantize(const Matrix<double>& x, const QuantParams& q) {
  q.validate();
  Matrix<std::int8_t> y(x.rows(), x.cols());
  for (std::int64_t r = 0; r < x.rows(); ++r) {
    for (std::int64_t c = 0; c < x.cols(); ++c) {
      const double v = x(r, c);
      if (!std::isfinite(v)) {
        throw std::invalid_argument("quantize: non-finite input at (" +
                                    std::to_string(r) + ", " +
                                    std::to_string(c) + ")");
      }
      double rounded = round_half_to_even(v / q.scale);
      if (rounded < q.qmin()) rounded = q.qmin();
      if (rounded > q.qmax()) rounded = q.qmax();
      y(r, c) = static_cast<std::int8_t>(rounded);
    }
  }
  return y;
}

Matrix<double> dequantize(const Matrix<std::int8_t>& y, const QuantParams& q) {
  q.validate();
  Matrix<double> x(y.rows(), y.cols());
  for (std::int64_t r = 0; r < y.rows(); ++r) {
    for (std::int64_t c = 0; c < y.cols(); ++c) {
      x(r, c) = static_cast<double>(y(r, c)) * q.scale;
    }
  }
  return x;
}

}  // namespace campsim
