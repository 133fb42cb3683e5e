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
 * Syntax tree for the supported OpenQASM 2.0 subset.
 */
#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace diaq::qasm {

/// Source position, 1-based. Positions never take part in AST equality so
/// that a printed and re-parsed tree compares equal to the original.
struct SourceLoc {
    std::size_t line = 0;
    std::size_t col = 0;
    friend bool operator==(const SourceLoc &, const SourceLoc &) noexcept {
        return true;
    }
};

/// Parameter expression over literals, pi, gate parameters, + - * / ^,
/// unary minus and the QASM unary functions.
struct Expr {
    enum class Kind { number, pi, param, negate, binary, call };
    Kind kind = Kind::number;
    double value = 0.0;     // number
    std::string name;       // param identifier or function name
    char op = 0;            // binary operator
    std::vector<Expr> args; // negate: 1, binary: 2, call: 1
    SourceLoc loc;

    [[nodiscard]] static Expr number(double v);
    [[nodiscard]] static Expr pi();
    [[nodiscard]] static Expr param(std::string name);
    [[nodiscard]] static Expr negate(Expr e);
    [[nodiscard]] static Expr binary(char op, Expr lhs, Expr rhs);
    [[nodiscard]] static Expr call(std::string fn, Expr arg);

    friend bool operator==(const Expr &, const Expr &) = default;
};

/// q or q[3]. Inside gate bodies the index is always absent.
struct Operand {
    std::string reg;
    std::optional<int> index;
    SourceLoc loc;
    friend bool operator==(const Operand &, const Operand &) = default;
};

struct GateCall {
    std::string name;
    std::vector<Expr> params;
    std::vector<Operand> args;
    SourceLoc loc;
    friend bool operator==(const GateCall &, const GateCall &) = default;
};

struct Barrier {
    std::vector<Operand> args;
    SourceLoc loc;
    friend bool operator==(const Barrier &, const Barrier &) = default;
};

using GateBodyStmt = std::variant<GateCall, Barrier>;

struct GateDef {
    std::string name;
    std::vector<std::string> params;
    std::vector<std::string> qubits;
    std::vector<GateBodyStmt> body;
    SourceLoc loc;
    friend bool operator==(const GateDef &, const GateDef &) = default;
};

struct RegDecl {
    bool quantum = true;
    std::string name;
    int size = 0;
    SourceLoc loc;
    friend bool operator==(const RegDecl &, const RegDecl &) = default;
};

struct Measure {
    Operand qubit;
    Operand target;
    SourceLoc loc;
    friend bool operator==(const Measure &, const Measure &) = default;
};

struct Include {
    std::string path;
    SourceLoc loc;
    friend bool operator==(const Include &, const Include &) = default;
};

using Statement =
    std::variant<Include, RegDecl, GateDef, GateCall, Barrier, Measure>;

struct Program {
    std::string version = "2.0";
    std::vector<Statement> statements;
    friend bool operator==(const Program &, const Program &) = default;
};

} // namespace diaq::qasm
