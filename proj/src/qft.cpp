/**
 * Copyright 2026, the Quditkit authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include "quditkit/qft.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>

#include <json.hpp>

#include "quditkit/errors.hpp"

namespace quditkit {

namespace {

// d^exponent as an exact integer when it fits, for the pi/<k> angle form.
std::optional<long long> checked_power(int base, int exponent) {
  long long value = 1;
  for (int i = 0; i < exponent; ++i) {
    if (value > std::numeric_limits<long long>::max() / base) return std::nullopt;
    value *= base;
  }
  return value;
}

// Index with its base-d digit string reversed.
std::size_t reverse_digits(std::size_t index, int d, int n) {
  std::size_t reversed = 0;
  for (int i = 0; i < n; ++i) {
    reversed = reversed * static_cast<std::size_t>(d) + index % static_cast<std::size_t>(d);
    index /= static_cast<std::size_t>(d);
  }
  return reversed;
}

Matrix fourier_matrix(std::size_t n, double sign) {
  if (n < 1) throw std::invalid_argument("matrix size must be >= 1");
  Matrix m(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x)
      m(y, x) = std::polar(
          scale, sign * 2.0 * std::numbers::pi *
                     static_cast<double>((x * y) % n) / static_cast<double>(n));
  return m;
}

}  // namespace

std::string to_json(const VerificationReport& report) {
  const nlohmann::json j{
      {"d", report.d},
      {"n", report.n},
      {"N", report.N},
      {"max_entry_error", report.max_entry_error},
      {"tolerance", report.tolerance},
      {"passed", report.passed},
      {"runtime_ms", report.runtime_ms},
  };
  return j.dump();
}

Circuit qft_circuit(int d, int n, bool include_swaps) {
  Circuit c(d, n);
  for (int t = n - 1; t >= 0; --t) {
    c.append(CircuitOp::one(OpKind::HDg, t));
    for (int control = t - 1; control >= 0; --control) {
      const int gap = t - control;
      const auto divisor = checked_power(d, gap);
      const Angle theta = divisor ? Angle::pi_over(*divisor)
                                  : Angle::radians(std::numbers::pi *
                                                   std::pow(d, -static_cast<double>(gap)));
      c.append(CircuitOp::two(OpKind::SumP, control, t, theta));
    }
  }
  if (include_swaps)
    for (int i = 0; i < n / 2; ++i)
      c.append(CircuitOp::two(OpKind::Swap, i, n - 1 - i));
  return c;
}

Matrix dft_matrix(std::size_t n) { return fourier_matrix(n, -1.0); }

Matrix inverse_dft_matrix(std::size_t n) { return fourier_matrix(n, +1.0); }

Matrix digit_reversal_permutation(int d, int n) {
  const std::size_t size = state_space_size(d, n);
  Matrix p(size, size);
  for (std::size_t x = 0; x < size; ++x) p(reverse_digits(x, d, n), x) = 1.0;
  return p;
}

VerificationReport verify_qft(int d, int n, double tolerance, bool include_swaps,
                              std::size_t cap) {
  const auto start = std::chrono::steady_clock::now();

  Matrix u = unitary_of(qft_circuit(d, n, include_swaps), cap);
  if (!include_swaps) {
    // The missing swap layer is exactly the digit-reversal permutation;
    // compose it on (it would have been applied after the main body).
    Matrix permuted(u.rows(), u.cols());
    for (std::size_t row = 0; row < u.rows(); ++row) {
      const std::size_t reversed = reverse_digits(row, d, n);
      for (std::size_t col = 0; col < u.cols(); ++col)
        permuted(reversed, col) = u(row, col);
    }
    u = std::move(permuted);
  }

  VerificationReport report;
  report.d = d;
  report.n = n;
  report.N = u.rows();
  report.tolerance = tolerance;
  report.max_entry_error = max_entry_distance(u, inverse_dft_matrix(report.N));
  report.passed = report.max_entry_error < tolerance;
  report.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace quditkit
