// Copyright 2026 The DiaQ Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * OpenQASM 2.0 front end: parse text into a Program, print it back, and
 * lower it to a flat Circuit over catalog gates.
 *
 * Supported: the version header, include "qelib1.inc" (built in, never read
 * from disk), qreg/creg, gate calls with register broadcast, non-recursive
 * gate definitions, barrier, terminal measure, // comments. Rejected with
 * UnsupportedFeature: if, reset, opaque, other includes, non-terminal
 * measure.
 */
#pragma once

#include <map>
#include <string>
#include <string_view>

#include "../circuit.hpp"
#include "ast.hpp"

namespace diaq::qasm {

/// Throws ParseError (with line/column) or UnsupportedFeature.
[[nodiscard]] Program parse(std::string_view source);

/// Canonical text form; parse(print(p)) == p.
[[nodiscard]] std::string print(const Program &program);
[[nodiscard]] std::string print(const Expr &expr);

/// Evaluates with gate parameters bound by name. Throws RangeError for
/// unbound names, unknown functions, or non-finite results.
[[nodiscard]] double evaluate(const Expr &expr,
                              const std::map<std::string, double> &bindings = {});

/// Throws ParseError for semantic errors (unknown register, index out of
/// range, mismatched broadcast), UnsupportedGate for gates that do not reduce
/// to the catalog, UnsupportedFeature for non-terminal measurement.
[[nodiscard]] Circuit lower(const Program &program);

/// parse + lower.
[[nodiscard]] Circuit load(std::string_view source);
[[nodiscard]] Circuit load_file(const std::string &path);

/// OPENQASM 2.0 text for a lowered circuit: one qreg "q", one creg "c"
/// when the circuit measures, parameters printed round-trip exact.
[[nodiscard]] std::string to_qasm(const Circuit &circuit);

/// The built-in qelib1.inc definitions for gates outside the catalog.
[[nodiscard]] std::string_view qelib1_source() noexcept;

} // namespace diaq::qasm
