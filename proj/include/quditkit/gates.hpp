/**
 * Copyright 2026, the Quditkit authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#pragma once

#include <cstddef>

#include "quditkit/matrix.hpp"

namespace quditkit {

// Dense unitary acting on one or two wires of dimension d. Two-wire matrices
// address the combined basis index control_level * d + target_level, so a
// controlled gate is block-diagonal with one d x d block per control level.
struct GateMatrix {
  int d = 0;      // levels per wire, >= 2
  int arity = 0;  // 1 or 2
  Matrix matrix;  // (d^arity) x (d^arity)

  std::size_t dim() const noexcept {
    return arity == 2 ? static_cast<std::size_t>(d) * d : static_cast<std::size_t>(d);
  }
};

// e^{i 2π x / d} for real x. Every phase below is produced through this one
// definition, which pins down fractional powers such as omega^{1/2} = e^{iπ/d}
// without branch-cut ambiguity.
Complex omega_power(int d, double exponent);

//-----------------------------------------------------------------------
// One-wire gates
//-----------------------------------------------------------------------

// Shift operator: |j> -> |(j+1) mod d>. X^d = I.
GateMatrix pauli_x(int d);

// Clock operator: |j> -> omega^j |j>. Z^d = I.
GateMatrix pauli_z(int d);

// Fourier gate with entries omega^{-jk}/sqrt(d). Satisfies X = H Z H†
// and H^2 = K; its adjoint has entries omega^{+jk}/sqrt(d).
GateMatrix hadamard(int d);

// diag(omega^{j/2}): half of a Z rotation. S^2 = Z for every d.
GateMatrix s_gate(int d);

// diag(omega^{j/4}): a quarter of a Z rotation. T^2 = S, T^4 = Z.
GateMatrix t_gate(int d);

// diag(omega^{j theta / pi}): level j is phased j times by theta radians.
// phase_gate(d, pi) = Z, phase_gate(d, pi/2) = S, phase_gate(d, pi/4) = T,
// and the gate is periodic in theta with period pi*d.
GateMatrix phase_gate(int d, double theta);

// Complement operator: |j> -> |(-j) mod d>. An involution; identity at d = 2.
GateMatrix complement_gate(int d);

//-----------------------------------------------------------------------
// Two-wire gates
//-----------------------------------------------------------------------

// Sum operator, block-diagonal diag(I, X, X^2, ..., X^{d-1}):
// |j>|k> -> |j>|(j+k) mod d>. Reduces to CNOT at d = 2.
GateMatrix sumx(int d);

// Controlled phase, block-diagonal diag(I, P(theta), ..., P(theta)^{d-1}):
// |j>|k> -> omega^{j k theta / pi} |j>|k>.
GateMatrix sump(int d, double theta);

// Conjugate transpose; arity and dimension are preserved.
GateMatrix adjoint(const GateMatrix& g);

}  // namespace quditkit
