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

#include "diaq/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <unordered_map>

#include "diaq/error.hpp"

namespace diaq {
namespace {

const std::unordered_map<std::string_view, GateArity> &catalog() {
    static const std::unordered_map<std::string_view, GateArity> table{
        {"id", {1, 0}},   {"h", {1, 0}},    {"x", {1, 0}},   {"y", {1, 0}},
        {"z", {1, 0}},    {"s", {1, 0}},    {"sdg", {1, 0}}, {"t", {1, 0}},
        {"tdg", {1, 0}},  {"rx", {1, 1}},   {"ry", {1, 1}},  {"rz", {1, 1}},
        {"u1", {1, 1}},   {"u2", {1, 2}},   {"u3", {1, 3}},  {"cx", {2, 0}},
        {"cz", {2, 0}},   {"swap", {2, 0}}, {"ccx", {3, 0}}, {"measure", {1, 0}},
        {"barrier", {-1, 0}},
    };
    return table;
}

} // namespace

std::size_t Circuit::gate_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(
        ops.begin(), ops.end(),
        [](const GateOp &op) { return is_unitary_op(op.name); }));
}

std::optional<GateArity> gate_arity(std::string_view name) {
    const auto &table = catalog();
    auto it = table.find(name);
    if (it == table.end()) {
        return std::nullopt;
    }
    return it->second;
}

bool is_unitary_op(std::string_view name) noexcept {
    return name != "barrier" && name != "measure";
}

void validate(const GateOp &op, int n_qubits) {
    const auto arity = gate_arity(op.name);
    if (!arity) {
        throw UnsupportedGate(op.name);
    }
    if (arity->qubits >= 0 &&
        static_cast<int>(op.qubits.size()) != arity->qubits) {
        throw RangeError("gate '" + op.name + "' expects " +
                         std::to_string(arity->qubits) + " qubit(s), got " +
                         std::to_string(op.qubits.size()));
    }
    if (static_cast<int>(op.params.size()) != arity->params) {
        throw RangeError("gate '" + op.name + "' expects " +
                         std::to_string(arity->params) + " parameter(s), got " +
                         std::to_string(op.params.size()));
    }
    for (std::size_t i = 0; i < op.qubits.size(); ++i) {
        const int q = op.qubits[i];
        if (q < 0 || q >= n_qubits) {
            throw RangeError("gate '" + op.name + "' uses qubit " +
                             std::to_string(q) + " outside a " +
                             std::to_string(n_qubits) + "-qubit register");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (op.qubits[j] == q) {
                throw RangeError("gate '" + op.name + "' repeats qubit " +
                                 std::to_string(q));
            }
        }
    }
    for (double p : op.params) {
        if (!std::isfinite(p)) {
            throw RangeError("gate '" + op.name + "' has a non-finite angle");
        }
    }
}

void validate(const Circuit &c) {
    if (c.n_qubits < 1) {
        throw RangeError("circuit needs at least one qubit");
    }
    for (const auto &op : c.ops) {
        validate(op, c.n_qubits);
    }
}

Circuit ghz_circuit(int n_qubits) {
    Circuit c;
    c.name = "ghz_n" + std::to_string(n_qubits);
    c.n_qubits = n_qubits;
    c.ops.push_back({"h", {0}, {}, {}});
    for (int q = 0; q + 1 < n_qubits; ++q) {
        c.ops.push_back({"cx", {q, q + 1}, {}, {}});
    }
    return c;
}

Circuit qft_circuit(int n_qubits) {
    Circuit c;
    c.name = "qft_n" + std::to_string(n_qubits);
    c.n_qubits = n_qubits;
    for (int i = 0; i < n_qubits; ++i) {
        c.ops.push_back({"h", {i}, {}, {}});
        for (int j = i + 1; j < n_qubits; ++j) {
            const double lambda =
                std::numbers::pi / static_cast<double>(1 << (j - i));
            // cu1(lambda) j, i
            c.ops.push_back({"u1", {j}, {lambda / 2}, {}});
            c.ops.push_back({"cx", {j, i}, {}, {}});
            c.ops.push_back({"u1", {i}, {-lambda / 2}, {}});
            c.ops.push_back({"cx", {j, i}, {}, {}});
            c.ops.push_back({"u1", {i}, {lambda / 2}, {}});
        }
    }
    for (int i = 0; i < n_qubits / 2; ++i) {
        c.ops.push_back({"swap", {i, n_qubits - 1 - i}, {}, {}});
    }
    return c;
}

} // namespace diaq
