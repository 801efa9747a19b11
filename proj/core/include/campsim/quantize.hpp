#pragma once

#include <cstdint>

#include "campsim/matrix.hpp"
#include "campsim/vecreg.hpp"

namespace campsim {

/// Symmetric per-tensor quantizer: y = clamp(round_half_to_even(x / scale))
/// into the mode's signed range; dequantize(y) = y * scale.
struct QuantParams {
  double scale = 1.0;
  CampMode mode = CampMode::Int8;

  int qmin() const { return mode == CampMode::Int8 ? -128 : -8; }
  int qmax() const { return mode == CampMode::Int8 ? 127 : 7; }
  void validate() const;
};

double round_half_to_even(double v);

Matrix<std::int8_t> quantize(const Matrix<double>& x, const QuantParams& q);
Matrix<double> dequantize(const Matrix<std::int8_t>& y, const QuantParams& q);

}  // namespace campsim
