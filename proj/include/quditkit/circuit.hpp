/**
 * Copyright 2026, the Quditkit authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quditkit/state_vector.hpp"

namespace quditkit {

enum class OpKind { X, Z, H, HDg, S, T, P, K, SumX, SumXDg, SumP, Swap };

int op_arity(OpKind kind);             // 1 or 2
bool op_has_theta(OpKind kind);        // true for P and SUMP
std::string_view op_name(OpKind kind); // grammar mnemonic, e.g. "HDG"
std::optional<OpKind> op_from_name(std::string_view name);

// An angle literal that remembers how it was written, so circuits serialize
// losslessly: pi/d^m has no finite decimal form.
class Angle {
public:
  enum class Form { Radians, PiOver, PiTimes };

  static Angle radians(double value);        // plain radians
  static Angle pi_over(long long divisor);   // pi / k, k >= 1
  static Angle pi_times(double factor);      // pi * f

  Form form() const noexcept { return form_; }
  double value() const noexcept { return radians_; }  // always radians

  // pi/k keeps its integer divisor; the other forms print with enough
  // digits to reparse bit-exactly.
  std::string to_string() const;

private:
  Angle(Form form, double radians, long long divisor)
      : form_(form), radians_(radians), divisor_(divisor) {}

  Form form_;
  double radians_;
  long long divisor_;  // meaningful for PiOver only
};

// One gate application. For two-wire ops wires[0] is the control and
// wires[1] the target (SWAP is symmetric in its two wires); one-wire ops
// leave wires[1] at -1. theta is present exactly for P and SUMP.
struct CircuitOp {
  OpKind kind;
  std::array<int, 2> wires;
  std::optional<Angle> theta;

  static CircuitOp one(OpKind kind, int wire);
  static CircuitOp one(OpKind kind, int wire, Angle theta);
  static CircuitOp two(OpKind kind, int control, int target);
  static CircuitOp two(OpKind kind, int control, int target, Angle theta);
};

// Ordered gate applications on an n-wire register of dimension d. append()
// validates each op, so a constructed circuit is always well formed;
// circuits are immutable in practice once built and safe to share.
class Circuit {
public:
  Circuit(int d, int n);

  int d() const noexcept { return d_; }
  int n() const noexcept { return n_; }
  const std::vector<CircuitOp>& ops() const noexcept { return ops_; }

  // Validates arity, wire range, wire distinctness and theta presence;
  // throws std::invalid_argument otherwise.
  void append(const CircuitOp& op);

private:
  int d_;
  int n_;
  std::vector<CircuitOp> ops_;
};

// The four-op swap decomposition over the primitive gate set:
//   SUMX† (control t_wire, target c_wire)
//   SUMX  (control c_wire, target t_wire)
//   SUMX† (control t_wire, target c_wire)
//   K on c_wire
// which carries |j>|k> -> (j-k, k) -> (j-k, j) -> (-k, j) -> (k, j) with no
// stray phase. Throws std::invalid_argument for equal wires.
std::vector<CircuitOp> swap_macro(int c_wire, int t_wire);

// Applies ops left to right with the strided kernels, lowering SWAP through
// swap_macro first. Errors are reported with the op position attached.
StateVector simulate(const Circuit& c, const std::vector<int>& initial_digits);

inline constexpr std::size_t kDefaultUnitaryCap = 4096;

// Full d^n x d^n circuit operator; column x is the simulation of basis
// state x. Throws CapExceededError when d^n exceeds `cap` (the result takes
// N^2 complex entries, about 256 MiB at the default cap).
Matrix unitary_of(const Circuit& c, std::size_t cap = kDefaultUnitaryCap);

}  // namespace quditkit
