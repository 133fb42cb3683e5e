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
 * Parameter-resolved gate sequences.
 *
 * Qubit 0 is the most significant bit of a basis index: in an n-qubit
 * register, qubit q maps to bit (n - 1 - q). Bitstrings are printed
 * q0 ... q(n-1) from left to right.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace diaq {

struct GateOp {
    std::string name;
    std::vector<int> qubits;
    std::vector<double> params;
    /// Classical target bits; only used by "measure".
    std::vector<int> clbits;

    friend bool operator==(const GateOp &, const GateOp &) = default;
};

struct Circuit {
    std::string name;
    int n_qubits = 1;
    int creg_size = 0;
    std::vector<GateOp> ops;

    /// Ops that act on the state (everything except barrier and measure).
    [[nodiscard]] std::size_t gate_count() const noexcept;

    friend bool operator==(const Circuit &, const Circuit &) = default;
};

/// Qubit and parameter arity of a catalog gate.
struct GateArity {
    int qubits;
    int params;
};

/// Arity of a known gate, nullopt otherwise. barrier has qubits == -1
/// (any number).
[[nodiscard]] std::optional<GateArity> gate_arity(std::string_view name);

[[nodiscard]] bool is_unitary_op(std::string_view name) noexcept;

/// Throws RangeError for bad qubits or parameter counts and UnsupportedGate
/// for unknown names.
void validate(const GateOp &op, int n_qubits);
void validate(const Circuit &c);

/// h on qubit 0 followed by the cx ladder cx(i, i+1).
[[nodiscard]] Circuit ghz_circuit(int n_qubits);

/// Textbook QFT on qubit 0 as the most significant input bit: h plus
/// controlled phases, final qubit-reversal swaps. Controlled phases are
/// lowered to u1/cx exactly as qelib1 defines cu1.
[[nodiscard]] Circuit qft_circuit(int n_qubits);

} // namespace diaq
