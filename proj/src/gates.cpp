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

#include "diaq/gates.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "diaq/error.hpp"
#include "diaq/linalg.hpp"

namespace diaq {
namespace {

using cd = std::complex<double>;

DenseMatrix<double> mat2(cd a, cd b, cd c, cd d) {
    DenseMatrix<double> m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

DenseMatrix<double> u3(double theta, double phi, double lambda) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    return mat2(c, -std::polar(s, lambda), std::polar(s, phi),
                std::polar(c, phi + lambda));
}

DenseMatrix<double> permutation(std::size_t n,
                                const std::vector<std::size_t> &image) {
    DenseMatrix<double> m(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        m(image[c], c) = 1.0;
    }
    return m;
}

[[nodiscard]] std::size_t bit(std::size_t width, int position) {
    return std::size_t{1} << (width - 1 - static_cast<std::size_t>(position));
}

} // namespace

DenseMatrix<double> gate_dense(const GateOp &op) {
    const auto arity = gate_arity(op.name);
    if (!arity || !is_unitary_op(op.name)) {
        throw UnsupportedGate(op.name);
    }
    if (static_cast<int>(op.params.size()) != arity->params) {
        throw RangeError("gate '" + op.name + "' expects " +
                         std::to_string(arity->params) + " parameter(s)");
    }
    const auto &p = op.params;
    const double r2 = 1.0 / std::numbers::sqrt2;
    const cd i{0.0, 1.0};
    const std::string &n = op.name;

    if (n == "id") {
        return mat2(1, 0, 0, 1);
    }
    if (n == "h") {
        return mat2(r2, r2, r2, -r2);
    }
    if (n == "x") {
        return mat2(0, 1, 1, 0);
    }
    if (n == "y") {
        return mat2(0, -i, i, 0);
    }
    if (n == "z") {
        return mat2(1, 0, 0, -1);
    }
    if (n == "s") {
        return mat2(1, 0, 0, i);
    }
    if (n == "sdg") {
        return mat2(1, 0, 0, -i);
    }
    if (n == "t") {
        return mat2(1, 0, 0, cd{r2, r2});
    }
    if (n == "tdg") {
        return mat2(1, 0, 0, cd{r2, -r2});
    }
    if (n == "rx") {
        const double c = std::cos(p[0] / 2);
        const double s = std::sin(p[0] / 2);
        return mat2(c, cd{0, -s}, cd{0, -s}, c);
    }
    if (n == "ry") {
        const double c = std::cos(p[0] / 2);
        const double s = std::sin(p[0] / 2);
        return mat2(c, -s, s, c);
    }
    if (n == "rz") {
        return mat2(std::polar(1.0, -p[0] / 2), 0, 0, std::polar(1.0, p[0] / 2));
    }
    if (n == "u1") {
        return mat2(1, 0, 0, std::polar(1.0, p[0]));
    }
    if (n == "u2") {
        return u3(std::numbers::pi / 2, p[0], p[1]);
    }
    if (n == "u3") {
        return u3(p[0], p[1], p[2]);
    }
    if (n == "cx") {
        return permutation(4, {0, 1, 3, 2});
    }
    if (n == "cz") {
        DenseMatrix<double> m = permutation(4, {0, 1, 2, 3});
        m(3, 3) = -1.0;
        return m;
    }
    if (n == "swap") {
        return permutation(4, {0, 2, 1, 3});
    }
    if (n == "ccx") {
        return permutation(8, {0, 1, 2, 3, 4, 5, 7, 6});
    }
    throw UnsupportedGate(n);
}

template <class T> DiaqMatrix<T> gate_matrix(const GateOp &op) {
    const DenseMatrix<double> dense = gate_dense(op);
    return from_double<T>(from_dense(dense, 0.0));
}

template <class T>
DiaqMatrix<T> build_span_unitary(const DiaqMatrix<T> &g,
                                 const std::vector<int> &positions,
                                 int span_width) {
    const auto k = positions.size();
    if (g.n_dim() != (std::size_t{1} << k)) {
        throw ShapeError("gate matrix does not match " + std::to_string(k) +
                         " positions");
    }
    if (span_width < static_cast<int>(k) || span_width > 30) {
        throw RangeError("span width out of range");
    }
    const auto s = static_cast<std::size_t>(span_width);
    std::size_t gate_mask = 0;
    std::vector<std::size_t> span_bits(k);
    for (std::size_t q = 0; q < k; ++q) {
        if (positions[q] < 0 || positions[q] >= span_width) {
            throw RangeError("span position out of range");
        }
        span_bits[q] = bit(s, positions[q]);
        if ((gate_mask & span_bits[q]) != 0) {
            throw RangeError("span positions must be distinct");
        }
        gate_mask |= span_bits[q];
    }

    const DenseMatrix<T> gd = to_dense(g);
    const std::size_t gn = g.n_dim();
    const std::size_t n = std::size_t{1} << s;
    DiaqMatrix<T> out(n);
    std::vector<std::size_t> scatter(gn);
    for (std::size_t idx = 0; idx < gn; ++idx) {
        std::size_t v = 0;
        for (std::size_t q = 0; q < k; ++q) {
            if ((idx & bit(k, static_cast<int>(q))) != 0) {
                v |= span_bits[q];
            }
        }
        scatter[idx] = v;
    }
    for (std::size_t r = 0; r < n; ++r) {
        std::size_t rg = 0;
        for (std::size_t q = 0; q < k; ++q) {
            if ((r & span_bits[q]) != 0) {
                rg |= bit(k, static_cast<int>(q));
            }
        }
        const std::size_t base = r & ~gate_mask;
        for (std::size_t cg = 0; cg < gn; ++cg) {
            const std::complex<T> v = gd(rg, cg);
            if (v != std::complex<T>{}) {
                out.set(r, base | scatter[cg], v);
            }
        }
    }
    return out;
}

template <class T>
std::vector<Placement<T>> compile(const Circuit &circuit, int span_limit) {
    if (span_limit < 2) {
        throw RangeError("span limit must be at least 2");
    }
    if (circuit.n_qubits < 1 || circuit.n_qubits > 62) {
        throw RangeError("unsupported qubit count " +
                         std::to_string(circuit.n_qubits));
    }
    const auto n = static_cast<std::size_t>(circuit.n_qubits);
    std::vector<Placement<T>> out;
    out.reserve(circuit.ops.size());
    for (std::size_t idx = 0; idx < circuit.ops.size(); ++idx) {
        const GateOp &op = circuit.ops[idx];
        if (!is_unitary_op(op.name)) {
            continue;
        }
        validate(op, circuit.n_qubits);
        const auto [lo_it, hi_it] =
            std::minmax_element(op.qubits.begin(), op.qubits.end());
        const int lo = *lo_it;
        const int hi = *hi_it;
        const int width = hi - lo + 1;
        if (width > span_limit) {
            std::ostringstream msg;
            msg << "op #" << idx << " '" << op.name << "' on qubits";
            for (int q : op.qubits) {
                msg << ' ' << q;
            }
            msg << " spans " << width << " qubits, above the span limit of "
                << span_limit << "; raise the span limit or reorder qubits";
            throw SpanOverflow(msg.str());
        }

        Placement<T> p;
        p.gate = gate_matrix<T>(op);
        p.targets = op.qubits;
        p.label = op.name;
        p.span_lo = lo;
        p.span_hi = hi;
        p.dim_a = std::size_t{1} << static_cast<std::size_t>(lo);
        p.dim_b = std::size_t{1} << (n - 1 - static_cast<std::size_t>(hi));

        std::vector<int> positions(op.qubits.size());
        bool in_place = true;
        for (std::size_t q = 0; q < op.qubits.size(); ++q) {
            positions[q] = op.qubits[q] - lo;
            in_place = in_place && positions[q] == static_cast<int>(q);
        }
        p.m = in_place ? p.gate : build_span_unitary(p.gate, positions, width);
        out.push_back(std::move(p));
    }
    return out;
}

template <class T>
std::vector<Placement<T>> fuse_pass(std::vector<Placement<T>> placements,
                                    bool enabled) {
    if (!enabled || placements.empty()) {
        return placements;
    }
    std::vector<Placement<T>> out;
    out.reserve(placements.size());
    for (auto &p : placements) {
        if (!out.empty()) {
            Placement<T> &last = out.back();
            if (last.dim_a == p.dim_a && last.dim_b == p.dim_b &&
                last.span_lo == p.span_lo && last.span_hi == p.span_hi) {
                last.m = matmul(p.m, last.m);
                if (last.targets == p.targets) {
                    last.gate = matmul(p.gate, last.gate);
                } else {
                    last.gate = last.m;
                    last.targets.clear();
                    for (int q = last.span_lo; q <= last.span_hi; ++q) {
                        last.targets.push_back(q);
                    }
                }
                last.label = p.label + "*" + last.label;
                continue;
            }
        }
        out.push_back(std::move(p));
    }
    return out;
}

#define DIAQ_INSTANTIATE(T)                                                    \
    template DiaqMatrix<T> gate_matrix<T>(const GateOp &);                     \
    template DiaqMatrix<T> build_span_unitary(                                 \
        const DiaqMatrix<T> &, const std::vector<int> &, int);                 \
    template std::vector<Placement<T>> compile<T>(const Circuit &, int);       \
    template std::vector<Placement<T>> fuse_pass(std::vector<Placement<T>>,    \
                                                 bool);

DIAQ_INSTANTIATE(float)
DIAQ_INSTANTIATE(double)

#undef DIAQ_INSTANTIATE

} // namespace diaq
