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
 * Gate catalog and placement compilation.
 *
 * A Placement is a gate ready for fused application as
 * I_dim_a (x) m (x) I_dim_b, where m acts on the contiguous qubit span
 * [span_lo, span_hi]. Gate matrices use qubits[0] as the most significant
 * bit of their own index (cx: control first).
 */
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "circuit.hpp"
#include "matrix.hpp"

namespace diaq {

inline constexpr int kDefaultSpanLimit = 14;

/// Textbook unitary of a catalog gate, 2^k x 2^k. Throws UnsupportedGate
/// for unknown names and RangeError for a wrong parameter count.
[[nodiscard]] DenseMatrix<double> gate_dense(const GateOp &op);

template <class T> [[nodiscard]] DiaqMatrix<T> gate_matrix(const GateOp &op);

template <class T> struct Placement {
    std::size_t dim_a = 1;
    DiaqMatrix<T> m;
    std::size_t dim_b = 1;
    int span_lo = 0;
    int span_hi = 0;
    /// Qubits the gate acts on and its 2^k matrix over them, in the same
    /// order. The dense backend uses these directly.
    std::vector<int> targets;
    DiaqMatrix<T> gate;
    /// Gate name, or names joined by '*' after fusion (latest first).
    std::string label;

    [[nodiscard]] int span_width() const noexcept {
        return span_hi - span_lo + 1;
    }
};

/**
 * Embeds a 2^k gate into a 2^s span. positions[i] is the span-local offset
 * (0 = most significant) of gate qubit i. U[r, c] = g[r_g, c_g] when the
 * non-gate bits of r and c agree, 0 otherwise.
 */
template <class T>
[[nodiscard]] DiaqMatrix<T> build_span_unitary(const DiaqMatrix<T> &g,
                                               const std::vector<int> &positions,
                                               int span_width);

/// One placement per unitary op, in circuit order. Throws SpanOverflow
/// naming the op when a gate spans more than span_limit qubits.
template <class T>
[[nodiscard]] std::vector<Placement<T>> compile(const Circuit &circuit,
                                                int span_limit = kDefaultSpanLimit);

/// Greedy left-to-right merge of neighbours with identical
/// (dim_a, dim_b, span): m = later x earlier.
template <class T>
[[nodiscard]] std::vector<Placement<T>> fuse_pass(std::vector<Placement<T>> placements,
                                                  bool enabled);

} // namespace diaq
