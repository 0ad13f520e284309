/**
 * Copyright 2026, the Quditkit authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include <cmath>
#include <cstring>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "oracles.hpp"
#include "quditkit/state_vector.hpp"

using namespace quditkit;
using testutil::embed_1;
using testutil::embed_2;
using testutil::mat_vec;
using testutil::max_amp_distance;
using testutil::random_state;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<GateMatrix> one_wire_gates(int d) {
  return {pauli_x(d), pauli_z(d),        hadamard(d),       s_gate(d),
          t_gate(d),  phase_gate(d, 0.7), complement_gate(d)};
}

std::vector<GateMatrix> two_wire_gates(int d) {
  return {sumx(d), adjoint(sumx(d)), sump(d, 0.7), sump(d, kPi / 3.0)};
}

// Probability of each digit value on one wire, from |amplitude|^2.
std::vector<double> wire_marginal(const StateVector& state, int wire) {
  std::vector<double> marginal(static_cast<std::size_t>(state.d()));
  for (std::size_t x = 0; x < state.size(); ++x) {
    const auto digits = index_to_digits(x, state.d(), state.n());
    marginal[static_cast<std::size_t>(digits[static_cast<std::size_t>(wire)])] +=
        std::norm(state.amplitudes()[x]);
  }
  return marginal;
}

}  // namespace

TEST_CASE("index/digit conversions are inverse little-endian bijections") {
  CHECK(index_to_digits(5, 3, 2) == std::vector<int>{2, 1});  // 5 = 2 + 1*3
  CHECK(index_to_digits(0, 4, 3) == std::vector<int>{0, 0, 0});
  CHECK(digits_to_index({2, 1}, 3) == 5);

  for (auto [d, n] : {std::pair{2, 4}, std::pair{3, 3}, std::pair{5, 2}}) {
    const std::size_t size = state_space_size(d, n);
    for (std::size_t x = 0; x < size; ++x)
      CHECK(digits_to_index(index_to_digits(x, d, n), d) == x);
  }

  CHECK_THROWS_AS(index_to_digits(9, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(digits_to_index({3, 0}, 3), std::invalid_argument);
  CHECK_THROWS_AS(digits_to_index({-1, 0}, 3), std::invalid_argument);
}

TEST_CASE("state_space_size validates and guards overflow") {
  CHECK(state_space_size(2, 10) == 1024);
  CHECK(state_space_size(3, 1) == 3);
  CHECK_THROWS_AS(state_space_size(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(state_space_size(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(state_space_size(10, 100), std::invalid_argument);
}

TEST_CASE("basis_state puts a single unit amplitude at the digit index") {
  const StateVector a = basis_state(3, 1, {2});
  CHECK(a.amplitudes()[2] == Complex(1.0));
  CHECK(a.norm() == doctest::Approx(1.0));

  const StateVector b = basis_state(2, 2, {1, 0});
  CHECK(b.amplitudes()[1] == Complex(1.0));

  CHECK_THROWS_AS(basis_state(3, 2, {0}), std::invalid_argument);
  CHECK_THROWS_AS(basis_state(3, 2, {0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(StateVector(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(StateVector(1, 2), std::invalid_argument);
}

TEST_CASE("StateVector adopts amplitude arrays of the right length only") {
  std::vector<Complex> amps(9, 0.0);
  amps[4] = 1.0;
  const StateVector state(3, 2, std::move(amps));
  CHECK(state.amplitudes()[4] == Complex(1.0));
  CHECK_THROWS_AS(StateVector(3, 2, std::vector<Complex>(8)), std::invalid_argument);
}

TEST_CASE("apply_1 acts on the target wire") {
  StateVector state = basis_state(3, 1, {0});
  state.apply_1(pauli_x(3), 0);
  CHECK(std::abs(state.amplitudes()[1] - Complex(1.0)) < 1e-15);

  SUBCASE("identity leaves amplitudes bit-identical") {
    StateVector s = random_state(3, 3, 11);
    const std::vector<Complex> before(s.amplitudes().begin(), s.amplitudes().end());
    GateMatrix id{3, 1, Matrix::identity(3)};
    s.apply_1(id, 1);
    CHECK(std::memcmp(before.data(), s.amplitudes().data(),
                      before.size() * sizeof(Complex)) == 0);
  }

  SUBCASE("errors") {
    StateVector s(3, 2);
    CHECK_THROWS_AS(s.apply_1(pauli_x(3), 2), std::invalid_argument);
    CHECK_THROWS_AS(s.apply_1(pauli_x(3), -1), std::invalid_argument);
    CHECK_THROWS_AS(s.apply_1(pauli_x(4), 0), std::invalid_argument);
    CHECK_THROWS_AS(s.apply_1(sumx(3), 0), std::invalid_argument);
  }
}

TEST_CASE("apply_1 matches the dense embedded operator") {
  for (auto [d, n] : {std::pair{2, 4}, std::pair{3, 2}, std::pair{4, 2}, std::pair{5, 2}}) {
    for (int wire = 0; wire < n; ++wire) {
      for (const GateMatrix& g : one_wire_gates(d)) {
        const Matrix dense = embed_1(g, n, wire);
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
          StateVector state = random_state(d, n, 100 * seed + static_cast<std::uint64_t>(wire));
          const auto expected = mat_vec(dense, state.amplitudes());
          state.apply_1(g, wire);
          CAPTURE(d);
          CAPTURE(n);
          CAPTURE(wire);
          CHECK(max_amp_distance(state.amplitudes(), expected) < 1e-13);
        }
      }
    }
  }
}

TEST_CASE("apply_2 follows the control*d + target slice convention") {
  // digits (2, 1): wire 0 holds 2, wire 1 holds 1
  StateVector state = basis_state(3, 2, {2, 1});
  state.apply_2(sumx(3), 1, 0);  // control wire 1, target wire 0
  // target becomes (1 + 2) mod 3 = 0 -> digits (0, 1) -> index 3
  CHECK(std::abs(state.amplitudes()[digits_to_index({0, 1}, 3)] - Complex(1.0)) < 1e-15);

  SUBCASE("zero control level leaves the state untouched") {
    StateVector s = basis_state(3, 2, {2, 0});
    const std::vector<Complex> before(s.amplitudes().begin(), s.amplitudes().end());
    s.apply_2(sump(3, 1.7), 1, 0);  // control digit is 0
    CHECK(max_amp_distance(s.amplitudes(), before) == 0.0);
  }

  SUBCASE("errors") {
    StateVector s(3, 2);
    CHECK_THROWS_AS(s.apply_2(sumx(3), 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(s.apply_2(sumx(3), 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(s.apply_2(sumx(4), 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(s.apply_2(pauli_x(3), 0, 1), std::invalid_argument);
  }
}

TEST_CASE("apply_2 matches the dense embedded operator") {
  for (auto [d, n] : {std::pair{2, 3}, std::pair{3, 3}, std::pair{4, 2}}) {
    for (int control = 0; control < n; ++control) {
      for (int target = 0; target < n; ++target) {
        if (control == target) continue;
        for (const GateMatrix& g : two_wire_gates(d)) {
          const Matrix dense = embed_2(g, n, control, target);
          for (std::uint64_t seed = 0; seed < 3; ++seed) {
            StateVector state =
                random_state(d, n, 7919 * seed + static_cast<std::uint64_t>(control * n + target));
            const auto expected = mat_vec(dense, state.amplitudes());
            state.apply_2(g, control, target);
            CAPTURE(d);
            CAPTURE(control);
            CAPTURE(target);
            CHECK(max_amp_distance(state.amplitudes(), expected) < 1e-13);
          }
        }
      }
    }
  }
}

TEST_CASE("unitary application preserves the norm") {
  StateVector state = random_state(4, 3, 42);
  const double before = state.norm();
  for (const GateMatrix& g : one_wire_gates(4)) state.apply_1(g, 2);
  for (const GateMatrix& g : two_wire_gates(4)) state.apply_2(g, 0, 2);
  CHECK(std::abs(state.norm() - before) < 1e-12);
}

TEST_CASE("diagonal gates leave other wires' marginals unchanged") {
  for (const GateMatrix& g :
       {pauli_z(3), s_gate(3), t_gate(3), phase_gate(3, 1.3)}) {
    StateVector state = random_state(3, 3, 5);
    const auto marginal0 = wire_marginal(state, 0);
    const auto marginal2 = wire_marginal(state, 2);
    state.apply_1(g, 1);
    const auto after0 = wire_marginal(state, 0);
    const auto after2 = wire_marginal(state, 2);
    for (std::size_t i = 0; i < marginal0.size(); ++i) {
      CHECK(marginal0[i] == doctest::Approx(after0[i]).epsilon(1e-12));
      CHECK(marginal2[i] == doctest::Approx(after2[i]).epsilon(1e-12));
    }
  }
}

TEST_CASE("sumx followed by its adjoint restores the state") {
  StateVector state = random_state(5, 2, 77);
  const std::vector<Complex> before(state.amplitudes().begin(), state.amplitudes().end());
  state.apply_2(sumx(5), 1, 0);
  state.apply_2(adjoint(sumx(5)), 1, 0);
  CHECK(max_amp_distance(state.amplitudes(), before) < 1e-13);
}

TEST_CASE("inner_product is the conjugated dot product") {
  const StateVector zero = basis_state(3, 2, {0, 0});
  CHECK(std::abs(inner_product(zero, zero) - Complex(1.0)) < 1e-15);

  const StateVector other = basis_state(3, 2, {1, 2});
  CHECK(std::abs(inner_product(zero, other)) < 1e-15);

  SUBCASE("|<psi|U|psi>| is invariant under a global phase") {
    StateVector psi = random_state(3, 2, 9);
    StateVector evolved = psi;
    evolved.apply_1(hadamard(3), 0);
    const double magnitude = std::abs(inner_product(psi, evolved));

    const Complex phase = std::polar(1.0, 0.83);
    for (Complex& a : psi.amplitudes()) a *= phase;
    StateVector evolved2 = psi;
    evolved2.apply_1(hadamard(3), 0);
    CHECK(std::abs(inner_product(psi, evolved2)) == doctest::Approx(magnitude).epsilon(1e-12));
  }

  SUBCASE("shape mismatch") {
    CHECK_THROWS_AS(inner_product(StateVector(2, 2), StateVector(2, 3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(inner_product(StateVector(2, 2), StateVector(4, 1)),
                    std::invalid_argument);
  }
}
