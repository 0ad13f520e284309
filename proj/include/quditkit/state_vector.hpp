/**
 * Copyright 2026, the Quditkit authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "quditkit/gates.hpp"

namespace quditkit {

// d^n, with overflow checking. Throws std::invalid_argument for d < 2,
// n < 1, or a product that does not fit in std::size_t.
std::size_t state_space_size(int d, int n);

// Little-endian digit indexing: wire i holds digit x_i of x = sum_i x_i d^i,
// wire 0 least significant. These two are mutually inverse bijections.
std::vector<int> index_to_digits(std::size_t index, int d, int n);
std::size_t digits_to_index(const std::vector<int>& digits, int d);

// Amplitudes of an n-qudit register over d levels per wire, length d^n.
// Gates are applied in place by updating the length-d (or d^2) slice for
// each setting of the untouched digits; no d^n x d^n operator is ever
// materialized and scratch stays O(d^2).
//
// A StateVector is exclusively owned while mutated; share it across threads
// read-only. Results are deterministic for identical inputs.
class StateVector {
public:
  // |0...0>
  StateVector(int d, int n);

  // Adopts an existing amplitude array (length must be d^n). The caller is
  // responsible for normalization.
  StateVector(int d, int n, std::vector<Complex> amplitudes);

  int d() const noexcept { return d_; }
  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return amps_.size(); }

  std::span<Complex> amplitudes() noexcept { return amps_; }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }

  // L2 norm; 1 within 1e-10 for any state produced by unitary evolution.
  double norm() const;

  // In-place application of a one-wire gate to `target`. Equals the action
  // of I ⊗ ... ⊗ g ⊗ ... ⊗ I. O(size * d) time, O(d) scratch.
  void apply_1(const GateMatrix& g, int target);

  // In-place application of a two-wire gate. The length-d^2 slice for each
  // setting of the untouched digits is addressed control_digit * d +
  // target_digit, matching the block layout of the controlled gates.
  // O(size * d^2) time, O(d^2) scratch.
  void apply_2(const GateMatrix& g, int control, int target);

private:
  int d_;
  int n_;
  std::vector<Complex> amps_;
};

// Amplitude 1 at digits_to_index(digits), 0 elsewhere.
StateVector basis_state(int d, int n, const std::vector<int>& digits);

// <a|b>. Throws std::invalid_argument on shape mismatch.
Complex inner_product(const StateVector& a, const StateVector& b);

}  // namespace quditkit
