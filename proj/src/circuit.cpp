/**
 * Copyright 2026, the Quditkit authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include "quditkit/circuit.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "quditkit/errors.hpp"

namespace quditkit {

namespace {

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void require_finite_angle(double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("op angle must be finite");
}

struct BoundOp {
  GateMatrix gate;
  int wire0;
  int wire1;               // -1 for one-wire gates
  std::size_t op_index;    // position in the source circuit
};

GateMatrix gate_for(OpKind kind, int d, const std::optional<Angle>& theta) {
  switch (kind) {
    case OpKind::X: return pauli_x(d);
    case OpKind::Z: return pauli_z(d);
    case OpKind::H: return hadamard(d);
    case OpKind::HDg: return adjoint(hadamard(d));
    case OpKind::S: return s_gate(d);
    case OpKind::T: return t_gate(d);
    case OpKind::P: return phase_gate(d, theta->value());
    case OpKind::K: return complement_gate(d);
    case OpKind::SumX: return sumx(d);
    case OpKind::SumXDg: return adjoint(sumx(d));
    case OpKind::SumP: return sump(d, theta->value());
    case OpKind::Swap: break;  // lowered before gate construction
  }
  throw std::logic_error("SWAP must be lowered through swap_macro");
}

// Expands SWAPs and binds every op to its gate matrix once, so repeated
// simulation (unitary extraction) does not rebuild matrices per column.
std::vector<BoundOp> lower(const Circuit& c) {
  std::vector<BoundOp> program;
  program.reserve(c.ops().size());
  for (std::size_t i = 0; i < c.ops().size(); ++i) {
    const CircuitOp& op = c.ops()[i];
    if (op.kind == OpKind::Swap) {
      for (const CircuitOp& sub : swap_macro(op.wires[0], op.wires[1]))
        program.push_back({gate_for(sub.kind, c.d(), sub.theta), sub.wires[0],
                           sub.wires[1], i});
    } else {
      program.push_back({gate_for(op.kind, c.d(), op.theta), op.wires[0],
                         op.wires[1], i});
    }
  }
  return program;
}

void run_program(StateVector& state, const std::vector<BoundOp>& program,
                 const Circuit& c) {
  for (const BoundOp& bound : program) {
    try {
      if (bound.gate.arity == 1)
        state.apply_1(bound.gate, bound.wire0);
      else
        state.apply_2(bound.gate, bound.wire0, bound.wire1);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(
          "op #" + std::to_string(bound.op_index) + " (" +
          std::string(op_name(c.ops()[bound.op_index].kind)) + "): " + e.what());
    }
  }
}

}  // namespace

int op_arity(OpKind kind) {
  switch (kind) {
    case OpKind::SumX:
    case OpKind::SumXDg:
    case OpKind::SumP:
    case OpKind::Swap:
      return 2;
    default:
      return 1;
  }
}

bool op_has_theta(OpKind kind) {
  return kind == OpKind::P || kind == OpKind::SumP;
}

std::string_view op_name(OpKind kind) {
  switch (kind) {
    case OpKind::X: return "X";
    case OpKind::Z: return "Z";
    case OpKind::H: return "H";
    case OpKind::HDg: return "HDG";
    case OpKind::S: return "S";
    case OpKind::T: return "T";
    case OpKind::P: return "P";
    case OpKind::K: return "K";
    case OpKind::SumX: return "SUMX";
    case OpKind::SumXDg: return "SUMXDG";
    case OpKind::SumP: return "SUMP";
    case OpKind::Swap: return "SWAP";
  }
  return "?";
}

std::optional<OpKind> op_from_name(std::string_view name) {
  static constexpr std::pair<std::string_view, OpKind> kNames[] = {
      {"X", OpKind::X},        {"Z", OpKind::Z},
      {"H", OpKind::H},        {"HDG", OpKind::HDg},
      {"S", OpKind::S},        {"T", OpKind::T},
      {"P", OpKind::P},        {"K", OpKind::K},
      {"SUMX", OpKind::SumX},  {"SUMXDG", OpKind::SumXDg},
      {"SUMP", OpKind::SumP},  {"SWAP", OpKind::Swap}};
  for (const auto& [text, kind] : kNames)
    if (text == name) return kind;
  return std::nullopt;
}

Angle Angle::radians(double value) {
  require_finite_angle(value);
  return Angle(Form::Radians, value, 0);
}

Angle Angle::pi_over(long long divisor) {
  if (divisor < 1)
    throw std::invalid_argument("pi/<k> requires a positive integer divisor (got " +
                                std::to_string(divisor) + ")");
  return Angle(Form::PiOver, std::numbers::pi / static_cast<double>(divisor), divisor);
}

Angle Angle::pi_times(double factor) {
  require_finite_angle(factor);
  return Angle(Form::PiTimes, std::numbers::pi * factor, 0);
}

std::string Angle::to_string() const {
  switch (form_) {
    case Form::PiOver: return "pi/" + std::to_string(divisor_);
    case Form::PiTimes: return "pi*" + format_double(radians_ / std::numbers::pi);
    case Form::Radians: break;
  }
  return format_double(radians_);
}

namespace {

CircuitOp make_op(OpKind kind, int arity, int w0, int w1,
                  std::optional<Angle> theta) {
  if (op_arity(kind) != arity)
    throw std::invalid_argument(std::string(op_name(kind)) + " is a " +
                                std::to_string(op_arity(kind)) + "-wire op");
  if (op_has_theta(kind) != theta.has_value())
    throw std::invalid_argument(std::string(op_name(kind)) +
                                (op_has_theta(kind) ? " requires an angle"
                                                    : " does not take an angle"));
  return CircuitOp{kind, {w0, w1}, theta};
}

}  // namespace

CircuitOp CircuitOp::one(OpKind kind, int wire) {
  return make_op(kind, 1, wire, -1, std::nullopt);
}

CircuitOp CircuitOp::one(OpKind kind, int wire, Angle theta) {
  return make_op(kind, 1, wire, -1, theta);
}

CircuitOp CircuitOp::two(OpKind kind, int control, int target) {
  return make_op(kind, 2, control, target, std::nullopt);
}

CircuitOp CircuitOp::two(OpKind kind, int control, int target, Angle theta) {
  return make_op(kind, 2, control, target, theta);
}

Circuit::Circuit(int d, int n) : d_(d), n_(n) {
  state_space_size(d, 1);  // validates d >= 2
  if (n < 1)
    throw std::invalid_argument("wire count must be >= 1 (got " + std::to_string(n) +
                                ")");
}

void Circuit::append(const CircuitOp& op) {
  const int arity = op_arity(op.kind);
  for (int i = 0; i < arity; ++i) {
    const int wire = op.wires[static_cast<std::size_t>(i)];
    if (wire < 0 || wire >= n_)
      throw std::invalid_argument(std::string(op_name(op.kind)) + ": wire index " +
                                  std::to_string(wire) + " out of range (n=" +
                                  std::to_string(n_) + ")");
  }
  if (arity == 2 && op.wires[0] == op.wires[1])
    throw std::invalid_argument(std::string(op_name(op.kind)) +
                                ": wires must be distinct (both " +
                                std::to_string(op.wires[0]) + ")");
  if (op_has_theta(op.kind) != op.theta.has_value())
    throw std::invalid_argument(std::string(op_name(op.kind)) +
                                (op_has_theta(op.kind) ? ": missing angle"
                                                       : ": unexpected angle"));
  if (op.theta) require_finite_angle(op.theta->value());
  ops_.push_back(op);
}

std::vector<CircuitOp> swap_macro(int c_wire, int t_wire) {
  if (c_wire == t_wire)
    throw std::invalid_argument("SWAP wires must be distinct (both " +
                                std::to_string(c_wire) + ")");
  return {
      CircuitOp::two(OpKind::SumXDg, t_wire, c_wire),
      CircuitOp::two(OpKind::SumX, c_wire, t_wire),
      CircuitOp::two(OpKind::SumXDg, t_wire, c_wire),
      CircuitOp::one(OpKind::K, c_wire),
  };
}

StateVector simulate(const Circuit& c, const std::vector<int>& initial_digits) {
  StateVector state = basis_state(c.d(), c.n(), initial_digits);
  run_program(state, lower(c), c);
  return state;
}

Matrix unitary_of(const Circuit& c, std::size_t cap) {
  const std::size_t size = state_space_size(c.d(), c.n());
  if (size > cap) throw CapExceededError(size, cap);
  const std::vector<BoundOp> program = lower(c);
  Matrix u(size, size);
  for (std::size_t column = 0; column < size; ++column) {
    StateVector state = basis_state(c.d(), c.n(), index_to_digits(column, c.d(), c.n()));
    run_program(state, program, c);
    for (std::size_t row = 0; row < size; ++row) u(row, column) = state.amplitudes()[row];
  }
  return u;
}

}  // namespace quditkit
