/**
 * Copyright 2026, the Quditkit authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace quditkit {

using Complex = std::complex<double>;

// Dense row-major complex matrix. Deliberately minimal: gates are at most
// d^2 x d^2 and extracted circuit operators are capped by the caller, so a
// flat vector with naive products is all this library needs.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::vector<Complex>& data() noexcept { return data_; }
  const std::vector<Complex>& data() const noexcept { return data_; }

  // Conjugate transpose.
  Matrix adjoint() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

// Max over entries of |a - b| (complex modulus). Symmetric, zero iff equal.
// Throws std::invalid_argument on shape mismatch.
double max_entry_distance(const Matrix& a, const Matrix& b);

// Max-entry deviation of U†U from the identity.
double unitarity_error(const Matrix& u);

}  // namespace quditkit
