/**
 * Copyright 2026, the Quditkit authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include "quditkit/circuit_text.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace quditkit {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

// Splits one statement on spaces/tabs, after the comment (if any) has been
// removed. Keeps each token's starting column for error reporting.
std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

std::optional<long long> parse_integer(std::string_view text) {
  long long value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

std::optional<double> parse_decimal(std::string_view text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

[[noreturn]] void fail(std::size_t line, std::size_t column, std::string message) {
  throw ParseError(line, column, std::move(message));
}

// "d=3" -> 3, with the key checked literally.
long long parse_keyed_int(const Token& token, std::string_view key, std::size_t line) {
  const std::string prefix = std::string(key) + "=";
  if (!token.text.starts_with(prefix))
    fail(line, token.column,
         "expected " + prefix + "<int>, got '" + std::string(token.text) + "'");
  const auto value = parse_integer(token.text.substr(prefix.size()));
  if (!value)
    fail(line, token.column,
         "malformed integer in '" + std::string(token.text) + "'");
  return *value;
}

int parse_wire(const Token& token, int n, std::size_t line) {
  const auto value = parse_integer(token.text);
  if (!value)
    fail(line, token.column, "malformed wire index '" + std::string(token.text) + "'");
  if (*value < 0 || *value >= n)
    fail(line, token.column, "wire index " + std::to_string(*value) +
                                 " out of range (n=" + std::to_string(n) + ")");
  return static_cast<int>(*value);
}

}  // namespace

Angle parse_angle_literal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty angle");
  if (text.starts_with("pi/")) {
    const auto divisor = parse_integer(text.substr(3));
    if (!divisor || *divisor < 1)
      throw std::invalid_argument("pi/<k> requires a positive integer divisor");
    return Angle::pi_over(*divisor);
  }
  if (text.starts_with("pi*")) {
    const auto factor = parse_decimal(text.substr(3));
    if (!factor) throw std::invalid_argument("pi*<decimal> requires a decimal factor");
    return Angle::pi_times(*factor);
  }
  const auto value = parse_decimal(text);
  if (!value) throw std::invalid_argument("expected a decimal, pi/<int>, or pi*<decimal>");
  return Angle::radians(*value);
}

Circuit parse_circuit(std::string_view text) {
  std::optional<Circuit> circuit;
  std::size_t line_no = 0;
  std::size_t pos = 0;

  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                 ? text.size() - pos
                                                 : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);

    const std::vector<Token> tokens = tokenize(line);
    if (tokens.empty()) continue;

    if (!circuit) {
      if (tokens[0].text != "qudits")
        fail(line_no, tokens[0].column,
             "expected header 'qudits d=<int> n=<int>' before any op");
      if (tokens.size() != 3)
        fail(line_no, tokens[0].column, "header must be 'qudits d=<int> n=<int>'");
      const long long d = parse_keyed_int(tokens[1], "d", line_no);
      if (d < 2)
        fail(line_no, tokens[1].column,
             "qudit dimension must be >= 2 (got " + std::to_string(d) + ")");
      const long long n = parse_keyed_int(tokens[2], "n", line_no);
      if (n < 1)
        fail(line_no, tokens[2].column,
             "wire count must be >= 1 (got " + std::to_string(n) + ")");
      if (d > 1'000'000 || n > 1'000'000)
        fail(line_no, tokens[1].column, "header values out of supported range");
      circuit.emplace(static_cast<int>(d), static_cast<int>(n));
      continue;
    }

    if (tokens[0].text == "qudits")
      fail(line_no, tokens[0].column, "duplicate 'qudits' header");

    const auto kind = op_from_name(tokens[0].text);
    if (!kind)
      fail(line_no, tokens[0].column,
           "unknown gate mnemonic '" + std::string(tokens[0].text) + "'");

    const int arity = op_arity(*kind);
    const bool wants_theta = op_has_theta(*kind);
    const std::size_t expected = 1 + static_cast<std::size_t>(arity) + (wants_theta ? 1 : 0);
    if (tokens.size() < expected) {
      const Token& last = tokens.back();
      fail(line_no, last.column + last.text.size(),
           std::string(op_name(*kind)) + " expects " + std::to_string(arity) +
               " wire index(es)" + (wants_theta ? " and theta=<angle>" : ""));
    }
    if (tokens.size() > expected)
      fail(line_no, tokens[expected].column,
           "unexpected token '" + std::string(tokens[expected].text) + "' after " +
               std::string(op_name(*kind)) + " statement");

    int wires[2] = {-1, -1};
    for (int i = 0; i < arity; ++i)
      wires[i] = parse_wire(tokens[1 + static_cast<std::size_t>(i)], circuit->n(), line_no);
    if (arity == 2 && wires[0] == wires[1])
      fail(line_no, tokens[2].column,
           std::string(op_name(*kind)) + " wires must be distinct (both " +
               std::to_string(wires[0]) + ")");

    std::optional<Angle> theta;
    if (wants_theta) {
      const Token& token = tokens[expected - 1];
      if (!token.text.starts_with("theta="))
        fail(line_no, token.column,
             "expected theta=<angle>, got '" + std::string(token.text) + "'");
      try {
        theta = parse_angle_literal(token.text.substr(6));
      } catch (const std::invalid_argument& e) {
        fail(line_no, token.column, "malformed angle '" +
                                        std::string(token.text.substr(6)) +
                                        "': " + e.what());
      }
    }

    if (arity == 1)
      circuit->append(theta ? CircuitOp::one(*kind, wires[0], *theta)
                            : CircuitOp::one(*kind, wires[0]));
    else
      circuit->append(theta ? CircuitOp::two(*kind, wires[0], wires[1], *theta)
                            : CircuitOp::two(*kind, wires[0], wires[1]));
  }

  if (!circuit) fail(1, 1, "missing 'qudits d=<int> n=<int>' header");
  return std::move(*circuit);
}

std::string serialize_circuit(const Circuit& c) {
  std::string out = "qudits d=" + std::to_string(c.d()) + " n=" + std::to_string(c.n()) + "\n";
  for (const CircuitOp& op : c.ops()) {
    out += op_name(op.kind);
    for (int i = 0; i < op_arity(op.kind); ++i)
      out += " " + std::to_string(op.wires[static_cast<std::size_t>(i)]);
    if (op.theta) out += " theta=" + op.theta->to_string();
    out += "\n";
  }
  return out;
}

}  // namespace quditkit
