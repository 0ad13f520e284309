/**
 * Copyright 2026, the Quditkit authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#pragma once

#include <cstddef>
#include <string>

#include "quditkit/circuit.hpp"

namespace quditkit {

// Outcome of checking a QFT circuit operator against the independently
// constructed inverse-DFT matrix. passed <=> max_entry_error < tolerance.
struct VerificationReport {
  int d = 0;
  int n = 0;
  std::size_t N = 0;            // d^n
  double max_entry_error = 0.0; // entrywise, no global-phase allowance
  double tolerance = 0.0;
  bool passed = false;
  double runtime_ms = 0.0;
};

// Single JSON object with keys d, n, N, max_entry_error, tolerance, passed,
// runtime_ms.
std::string to_json(const VerificationReport& report);

// The Fourier-transform circuit on n wires of dimension d:
//
//   for t = n-1 down to 0:
//     HDG t
//     for c = t-1 down to 0:  SUMP c t theta=pi/d^(t-c)
//   then, when include_swaps, SWAP i (n-1-i) for i < n/2.
//
// The rotation angle pi*d^{-(t-c)} is the unique SUMP angle for which the
// circuit operator equals the normalized inverse DFT; at d = 2 it reduces to
// the familiar pi/2^m ladder.
Circuit qft_circuit(int d, int n, bool include_swaps = true);

// Normalized DFT pair: dft has entries e^{-2πi xy/N}/sqrt(N) at [y][x],
// inverse_dft its conjugate e^{+2πi xy/N}/sqrt(N). Both unitary.
Matrix dft_matrix(std::size_t n);
Matrix inverse_dft_matrix(std::size_t n);

// Permutation |x> -> |x with its base-d digit string reversed>; exactly the
// operator the trailing SWAP layer of qft_circuit implements.
Matrix digit_reversal_permutation(int d, int n);

// Builds qft_circuit(d, n, include_swaps), extracts its operator, and
// measures the max entry distance to inverse_dft_matrix(d^n). Without the
// swap layer the digit-reversal permutation is composed on afterwards, so
// both routes must meet the same tolerance. Equality is strict entrywise;
// a global phase is deliberately not quotiented out.
VerificationReport verify_qft(int d, int n, double tolerance = 1e-9,
                              bool include_swaps = true,
                              std::size_t cap = kDefaultUnitaryCap);

}  // namespace quditkit
