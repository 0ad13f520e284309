/**
 * Copyright 2026, the Quditkit authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include "quditkit/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace quditkit {

namespace {

void require_dimension(int d) {
  if (d < 2)
    throw std::invalid_argument("qudit dimension must be >= 2 (got " +
                                std::to_string(d) + ")");
}

void require_finite_angle(double theta) {
  if (!std::isfinite(theta))
    throw std::invalid_argument("gate angle must be finite");
}

// Diagonal one-wire gate with level-j entry omega^{j * scale}.
GateMatrix diagonal_power_gate(int d, double scale) {
  GateMatrix g{d, 1, Matrix(d, d)};
  for (int j = 0; j < d; ++j) g.matrix(j, j) = omega_power(d, j * scale);
  return g;
}

}  // namespace

Complex omega_power(int d, double exponent) {
  require_dimension(d);
  if (!std::isfinite(exponent))
    throw std::invalid_argument("omega exponent must be finite");
  return std::polar(1.0, 2.0 * std::numbers::pi * exponent / d);
}

GateMatrix pauli_x(int d) {
  require_dimension(d);
  GateMatrix g{d, 1, Matrix(d, d)};
  for (int j = 0; j < d; ++j) g.matrix((j + 1) % d, j) = 1.0;
  return g;
}

GateMatrix pauli_z(int d) {
  return diagonal_power_gate(d, 1.0);
}

GateMatrix hadamard(int d) {
  require_dimension(d);
  GateMatrix g{d, 1, Matrix(d, d)};
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      g.matrix(j, k) = scale * omega_power(d, -static_cast<double>(j) * k);
  return g;
}

GateMatrix s_gate(int d) {
  return diagonal_power_gate(d, 0.5);
}

GateMatrix t_gate(int d) {
  return diagonal_power_gate(d, 0.25);
}

GateMatrix phase_gate(int d, double theta) {
  require_finite_angle(theta);
  return diagonal_power_gate(d, theta / std::numbers::pi);
}

GateMatrix complement_gate(int d) {
  require_dimension(d);
  GateMatrix g{d, 1, Matrix(d, d)};
  for (int j = 0; j < d; ++j) g.matrix((d - j) % d, j) = 1.0;
  return g;
}

GateMatrix sumx(int d) {
  require_dimension(d);
  const std::size_t dim = static_cast<std::size_t>(d) * d;
  GateMatrix g{d, 2, Matrix(dim, dim)};
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      g.matrix(static_cast<std::size_t>(j) * d + (j + k) % d,
               static_cast<std::size_t>(j) * d + k) = 1.0;
  return g;
}

GateMatrix sump(int d, double theta) {
  require_dimension(d);
  require_finite_angle(theta);
  const std::size_t dim = static_cast<std::size_t>(d) * d;
  GateMatrix g{d, 2, Matrix(dim, dim)};
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      const std::size_t idx = static_cast<std::size_t>(j) * d + k;
      g.matrix(idx, idx) = omega_power(d, j * k * theta / std::numbers::pi);
    }
  return g;
}

GateMatrix adjoint(const GateMatrix& g) {
  return GateMatrix{g.d, g.arity, g.matrix.adjoint()};
}

}  // namespace quditkit
