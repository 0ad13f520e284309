/**
 * Copyright 2026, the Quditkit authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quditkit {

// Raised when circuit text violates the .qc grammar. Line and column are
// 1-based and always point at the offending statement.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, std::size_t column, std::string message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line), column_(column), message_(std::move(message)) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

// Raised when a full-unitary extraction would exceed the configured cap.
class CapExceededError : public std::runtime_error {
public:
  CapExceededError(std::size_t dimension, std::size_t cap)
      : std::runtime_error("unitary extraction needs " +
                           std::to_string(dimension) + " columns, above the cap of " +
                           std::to_string(cap) +
                           " (raise the cap to extract this operator)"),
        dimension_(dimension), cap_(cap) {}

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t cap() const noexcept { return cap_; }

private:
  std::size_t dimension_;
  std::size_t cap_;
};

}  // namespace quditkit
