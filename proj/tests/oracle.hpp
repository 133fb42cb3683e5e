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

// Dense reference implementations and random inputs shared by the tests.
// Everything here works on plain row-major complex<double> arrays and is
// deliberately naive: triple loops, basis enumeration, no diagonal logic.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "diaq/gates.hpp"
#include "diaq/matrix.hpp"

namespace oracle {

using cd = std::complex<double>;
using Dense = diaq::DenseMatrix<double>;

inline Dense zeros(std::size_t n) { return Dense(n, n); }

inline Dense eye(std::size_t n) {
    Dense m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

inline Dense matmul(const Dense &a, const Dense &b) {
    Dense c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < b.cols; ++j) {
            cd acc = 0.0;
            for (std::size_t k = 0; k < a.cols; ++k) {
                acc += a(i, k) * b(k, j);
            }
            c(i, j) = acc;
        }
    }
    return c;
}

inline std::vector<cd> matvec(const Dense &a, const std::vector<cd> &x) {
    std::vector<cd> y(a.rows);
    for (std::size_t i = 0; i < a.rows; ++i) {
        cd acc = 0.0;
        for (std::size_t k = 0; k < a.cols; ++k) {
            acc += a(i, k) * x[k];
        }
        y[i] = acc;
    }
    return y;
}

inline Dense kron(const Dense &a, const Dense &b) {
    Dense c(a.rows * b.rows, a.cols * b.cols);
    for (std::size_t ia = 0; ia < a.rows; ++ia)
        for (std::size_t ja = 0; ja < a.cols; ++ja)
            for (std::size_t ib = 0; ib < b.rows; ++ib)
                for (std::size_t jb = 0; jb < b.cols; ++jb)
                    c(ia * b.rows + ib, ja * b.cols + jb) = a(ia, ja) * b(ib, jb);
    return c;
}

inline double max_abs(const Dense &m) {
    double best = 0.0;
    for (const auto &v : m.data) {
        best = std::max(best, std::abs(v));
    }
    return best;
}

inline double max_diff(const Dense &a, const Dense &b) {
    double best = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        best = std::max(best, std::abs(a.data[i] - b.data[i]));
    }
    return best;
}

inline double max_diff(const std::vector<cd> &a, const std::vector<cd> &b) {
    double best = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        best = std::max(best, std::abs(a[i] - b[i]));
    }
    return best;
}

inline double max_abs(const std::vector<cd> &v) {
    double best = 0.0;
    for (const auto &x : v) {
        best = std::max(best, std::abs(x));
    }
    return best;
}

/// Embeds gate g acting on `qubits` (qubits[0] most significant in g) into
/// an n-qubit register by enumerating basis states. Qubit 0 is the MSB.
inline Dense embed(const Dense &g, const std::vector<int> &qubits, int n) {
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t k = qubits.size();
    std::uint64_t mask = 0;
    for (int q : qubits) {
        mask |= std::uint64_t{1} << (n - 1 - q);
    }
    auto gather = [&](std::uint64_t idx) {
        std::size_t out = 0;
        for (std::size_t t = 0; t < k; ++t) {
            out = (out << 1) | ((idx >> (n - 1 - qubits[t])) & 1U);
        }
        return out;
    };
    Dense u(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            if ((r & ~mask) == (c & ~mask)) {
                u(r, c) = g(gather(r), gather(c));
            }
        }
    }
    return u;
}

inline std::vector<cd> random_vector(std::mt19937_64 &rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cd> v(n);
    for (auto &x : v) {
        x = {u(rng), u(rng)};
    }
    return v;
}

/// n x n matrix with `count` distinct random diagonals of random values.
inline diaq::DiaqMatrix<double> random_diaq(std::mt19937_64 &rng, std::size_t n,
                                            std::size_t count) {
    const auto span = static_cast<std::int64_t>(n) - 1;
    std::uniform_int_distribution<std::int64_t> pick(-span, span);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    count = std::min<std::size_t>(count, 2 * n - 1);
    std::set<std::int64_t> chosen;
    while (chosen.size() < count) {
        chosen.insert(pick(rng));
    }
    diaq::DiaqMatrix<double> m(n);
    for (const auto d : chosen) {
        diaq::Diagonal<double> diag(d, n);
        for (std::size_t k = 0; k < diag.size(); ++k) {
            diag.values.re[k] = u(rng);
            diag.values.im[k] = u(rng);
        }
        m.insert(std::move(diag));
    }
    return m;
}

/// Direct element reads through at(); independent of to_dense.
inline Dense densify(const diaq::DiaqMatrix<double> &m) {
    Dense d(m.n_dim(), m.n_dim());
    for (std::size_t r = 0; r < m.n_dim(); ++r)
        for (std::size_t c = 0; c < m.n_dim(); ++c)
            d(r, c) = m.at(r, c);
    return d;
}

/// Full state vector after applying every unitary op with dense matrices.
inline std::vector<cd> simulate(const diaq::Circuit &c) {
    const std::size_t dim = std::size_t{1} << c.n_qubits;
    std::vector<cd> x(dim);
    x[0] = 1.0;
    for (const auto &op : c.ops) {
        if (!diaq::is_unitary_op(op.name)) {
            continue;
        }
        x = matvec(embed(diaq::gate_dense(op), op.qubits, c.n_qubits), x);
    }
    return x;
}

} // namespace oracle
