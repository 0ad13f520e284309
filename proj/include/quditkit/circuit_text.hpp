/**
 * Copyright 2026, the Quditkit authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#pragma once

#include <string>
#include <string_view>

#include "quditkit/circuit.hpp"
#include "quditkit/errors.hpp"

namespace quditkit {

// Line-oriented circuit text (conventionally *.qc, UTF-8). One statement per
// line, `#` starts a comment, blank lines are ignored, LF and CRLF both
// accepted. The first statement must be the header:
//
//   qudits d=<int> n=<int>
//
// followed by ops:
//
//   X <w>    Z <w>    H <w>    HDG <w>    S <w>    T <w>    K <w>
//   P <w> theta=<angle>
//   SUMX <c> <t>    SUMXDG <c> <t>    SWAP <a> <b>
//   SUMP <c> <t> theta=<angle>
//
// where <angle> is a decimal literal in radians, `pi/<positive int>`, or
// `pi*<decimal>`.

// Throws ParseError, pinpointing the line and column of the first violation.
Circuit parse_circuit(std::string_view text);

// Emits the grammar above. parse_circuit(serialize_circuit(c)) reproduces c
// exactly: op order, wires, and the angle form each literal was written in.
std::string serialize_circuit(const Circuit& c);

// One <angle> literal, e.g. "pi/3", "pi*0.5", "1.25". Throws
// std::invalid_argument with the reason (no location; callers add it).
Angle parse_angle_literal(std::string_view text);

}  // namespace quditkit
