/**
 * Copyright 2026, the Quditkit authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include "quditkit/state_vector.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace quditkit {

namespace {

void require_wire(int wire, int n) {
  if (wire < 0 || wire >= n)
    throw std::invalid_argument("wire index " + std::to_string(wire) +
                                " out of range (n=" + std::to_string(n) + ")");
}

void require_same_dimension(const GateMatrix& g, int d) {
  if (g.d != d)
    throw std::invalid_argument("gate dimension " + std::to_string(g.d) +
                                " does not match state dimension " +
                                std::to_string(d));
}

bool is_diagonal(const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (r != c && m(r, c) != 0.0) return false;
  return true;
}

// d^wire; safe because wire < n and d^n is already known to fit.
std::size_t wire_stride(int d, int wire) {
  std::size_t stride = 1;
  for (int i = 0; i < wire; ++i) stride *= static_cast<std::size_t>(d);
  return stride;
}

}  // namespace

std::size_t state_space_size(int d, int n) {
  if (d < 2)
    throw std::invalid_argument("qudit dimension must be >= 2 (got " +
                                std::to_string(d) + ")");
  if (n < 1)
    throw std::invalid_argument("wire count must be >= 1 (got " +
                                std::to_string(n) + ")");
  std::size_t size = 1;
  for (int i = 0; i < n; ++i) {
    if (size > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(d))
      throw std::invalid_argument("state space d^n overflows addressable size (d=" +
                                  std::to_string(d) + ", n=" + std::to_string(n) + ")");
    size *= static_cast<std::size_t>(d);
  }
  return size;
}

std::vector<int> index_to_digits(std::size_t index, int d, int n) {
  const std::size_t size = state_space_size(d, n);
  if (index >= size)
    throw std::invalid_argument("basis index " + std::to_string(index) +
                                " out of range for d^n = " + std::to_string(size));
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    digits[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::size_t>(d));
    index /= static_cast<std::size_t>(d);
  }
  return digits;
}

std::size_t digits_to_index(const std::vector<int>& digits, int d) {
  const std::size_t size = state_space_size(d, static_cast<int>(digits.size()));
  (void)size;  // validates d and digit count, including overflow
  std::size_t index = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    const int digit = digits[i];
    if (digit < 0 || digit >= d)
      throw std::invalid_argument("digit " + std::to_string(digit) +
                                  " out of range [0, " + std::to_string(d) +
                                  ") at wire " + std::to_string(i));
    index = index * static_cast<std::size_t>(d) + static_cast<std::size_t>(digit);
  }
  return index;
}

StateVector::StateVector(int d, int n)
    : d_(d), n_(n), amps_(state_space_size(d, n)) {
  amps_[0] = 1.0;
}

StateVector::StateVector(int d, int n, std::vector<Complex> amplitudes)
    : d_(d), n_(n), amps_(std::move(amplitudes)) {
  const std::size_t expected = state_space_size(d, n);
  if (amps_.size() != expected)
    throw std::invalid_argument("amplitude array has length " +
                                std::to_string(amps_.size()) + ", expected d^n = " +
                                std::to_string(expected));
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const Complex& a : amps_) sum += std::norm(a);
  return std::sqrt(sum);
}

void StateVector::apply_1(const GateMatrix& g, int target) {
  if (g.arity != 1) throw std::invalid_argument("apply_1 requires a one-wire gate");
  require_same_dimension(g, d_);
  require_wire(target, n_);

  const std::size_t d = static_cast<std::size_t>(d_);
  const std::size_t stride = wire_stride(d_, target);
  const std::size_t block = stride * d;
  const Matrix& m = g.matrix;

  if (is_diagonal(m)) {
    for (std::size_t base = 0; base < amps_.size(); base += block) {
      for (std::size_t l = 0; l < d; ++l) {
        const Complex factor = m(l, l);
        Complex* slice = amps_.data() + base + l * stride;
        for (std::size_t i = 0; i < stride; ++i) slice[i] *= factor;
      }
    }
    return;
  }

  std::vector<Complex> scratch(d);
  for (std::size_t base = 0; base < amps_.size(); base += block) {
    for (std::size_t lo = 0; lo < stride; ++lo) {
      Complex* slice = amps_.data() + base + lo;
      for (std::size_t l = 0; l < d; ++l) scratch[l] = slice[l * stride];
      for (std::size_t r = 0; r < d; ++r) {
        Complex acc = 0.0;
        for (std::size_t l = 0; l < d; ++l) acc += m(r, l) * scratch[l];
        slice[r * stride] = acc;
      }
    }
  }
}

void StateVector::apply_2(const GateMatrix& g, int control, int target) {
  if (g.arity != 2) throw std::invalid_argument("apply_2 requires a two-wire gate");
  require_same_dimension(g, d_);
  require_wire(control, n_);
  require_wire(target, n_);
  if (control == target)
    throw std::invalid_argument("control and target must be distinct wires (both " +
                                std::to_string(control) + ")");

  const std::size_t d = static_cast<std::size_t>(d_);
  const std::size_t control_stride = wire_stride(d_, control);
  const std::size_t target_stride = wire_stride(d_, target);
  const std::size_t low_stride = std::min(control_stride, target_stride);
  const std::size_t high_stride = std::max(control_stride, target_stride);
  const Matrix& m = g.matrix;

  if (is_diagonal(m)) {
    for (std::size_t hi = 0; hi < amps_.size(); hi += high_stride * d) {
      for (std::size_t mid = 0; mid < high_stride; mid += low_stride * d) {
        for (std::size_t j = 0; j < d; ++j) {
          for (std::size_t k = 0; k < d; ++k) {
            const Complex factor = m(j * d + k, j * d + k);
            Complex* slice =
                amps_.data() + hi + mid + j * control_stride + k * target_stride;
            for (std::size_t lo = 0; lo < low_stride; ++lo) slice[lo] *= factor;
          }
        }
      }
    }
    return;
  }

  const std::size_t dim = d * d;
  std::vector<Complex> scratch(dim);
  for (std::size_t hi = 0; hi < amps_.size(); hi += high_stride * d) {
    for (std::size_t mid = 0; mid < high_stride; mid += low_stride * d) {
      for (std::size_t lo = 0; lo < low_stride; ++lo) {
        Complex* base = amps_.data() + hi + mid + lo;
        for (std::size_t j = 0; j < d; ++j)
          for (std::size_t k = 0; k < d; ++k)
            scratch[j * d + k] = base[j * control_stride + k * target_stride];
        for (std::size_t row = 0; row < dim; ++row) {
          Complex acc = 0.0;
          for (std::size_t col = 0; col < dim; ++col)
            if (m(row, col) != 0.0) acc += m(row, col) * scratch[col];
          base[(row / d) * control_stride + (row % d) * target_stride] = acc;
        }
      }
    }
  }
}

StateVector basis_state(int d, int n, const std::vector<int>& digits) {
  if (static_cast<int>(digits.size()) != n)
    throw std::invalid_argument("expected " + std::to_string(n) + " digits, got " +
                                std::to_string(digits.size()));
  StateVector state(d, n);
  const std::size_t index = digits_to_index(digits, d);
  state.amplitudes()[0] = 0.0;
  state.amplitudes()[index] = 1.0;
  return state;
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.d() != b.d() || a.n() != b.n())
    throw std::invalid_argument("inner product requires matching shapes (d=" +
                                std::to_string(a.d()) + ", n=" + std::to_string(a.n()) +
                                " vs d=" + std::to_string(b.d()) +
                                ", n=" + std::to_string(b.n()) + ")");
  Complex sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    sum += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
  return sum;
}

}  // namespace quditkit
