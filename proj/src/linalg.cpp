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

#include "diaq/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_set>
#include <utility>

#include "diaq/config.hpp"
#include "diaq/error.hpp"
#include "diaq/simd/kernels.hpp"

namespace diaq {
namespace {

using std::size_t;

[[nodiscard]] constexpr size_t mag(DiagIndex d) noexcept {
    return d < 0 ? static_cast<size_t>(-d) : static_cast<size_t>(d);
}

[[nodiscard]] constexpr DiagIndex min0(DiagIndex d) noexcept {
    return d < 0 ? d : 0;
}

/// Row range [lo, hi) over which the pair (dA, dB) contributes to a product.
struct RowRange {
    DiagIndex lo;
    DiagIndex hi;
    [[nodiscard]] bool empty() const noexcept { return hi <= lo; }
};

[[nodiscard]] RowRange pair_rows(DiagIndex da, DiagIndex db,
                                 DiagIndex n) noexcept {
    return {std::max({DiagIndex{0}, -da, -da - db}),
            std::min({n, n - da, n - da - db})};
}

/// c += contribution of (a, b) onto diagonal a.index + b.index.
template <class T>
void accumulate_pair(const Diagonal<T> &a, const Diagonal<T> &b, size_t n_dim,
                     Diagonal<T> &c, const simd::KernelTable<T> &k) {
    const DiagIndex n = static_cast<DiagIndex>(n_dim);
    const DiagIndex da = a.index;
    const DiagIndex db = b.index;
    const DiagIndex dc = da + db;
    const RowRange rows = pair_rows(da, db, n);
    if (rows.empty()) {
        return;
    }
    const auto ka = static_cast<size_t>(rows.lo + min0(da));
    const auto kb = static_cast<size_t>(rows.lo + da + min0(db));
    const auto kc = static_cast<size_t>(rows.lo + min0(dc));
    const auto len = static_cast<size_t>(rows.hi - rows.lo);
    k.cmac(a.values.re.data() + ka, a.values.im.data() + ka,
           b.values.re.data() + kb, b.values.im.data() + kb,
           c.values.re.data() + kc, c.values.im.data() + kc, len);
}

} // namespace

template <class T> DiaqMatrix<T> from_dense(const DenseMatrix<T> &m, T eps) {
    if (m.rows != m.cols) {
        throw ShapeError("from_dense expects a square matrix, got " +
                         std::to_string(m.rows) + "x" + std::to_string(m.cols));
    }
    const size_t n = m.rows;
    DiaqMatrix<T> out(n);
    const DiagIndex sn = static_cast<DiagIndex>(n);
    for (DiagIndex d = -(sn - 1); d <= sn - 1; ++d) {
        const size_t len = n - mag(d);
        const size_t r0 = d < 0 ? mag(d) : 0;
        bool keep = false;
        for (size_t k = 0; k < len && !keep; ++k) {
            const auto v = m(r0 + k, r0 + k + d);
            keep = std::abs(v.real()) + std::abs(v.imag()) > eps;
        }
        if (!keep) {
            continue;
        }
        Diagonal<T> diag(d, n);
        for (size_t k = 0; k < len; ++k) {
            diag.values.set(k, m(r0 + k, r0 + k + d));
        }
        out.insert(std::move(diag));
    }
    return out;
}

template <class T> DenseMatrix<T> to_dense(const DiaqMatrix<T> &a) {
    const size_t n = a.n_dim();
    DenseMatrix<T> out(n, n);
    for (const auto &[d, diag] : a.diagonals()) {
        const size_t r0 = d < 0 ? mag(d) : 0;
        for (size_t k = 0; k < diag.size(); ++k) {
            out(r0 + k, r0 + k + d) = diag.values[k];
        }
    }
    return out;
}

template <class T>
std::optional<Diagonal<T>> multiply_diagonals(const Diagonal<T> &a,
                                              const Diagonal<T> &b,
                                              size_t n_dim) {
    const DiagIndex dc = a.index + b.index;
    if (mag(dc) >= n_dim) {
        return std::nullopt;
    }
    if (pair_rows(a.index, b.index, static_cast<DiagIndex>(n_dim)).empty()) {
        return std::nullopt;
    }
    Diagonal<T> c(dc, n_dim);
    accumulate_pair(a, b, n_dim, c, simd::kernels<T>());
    return c;
}

template <class T>
DiaqMatrix<T> matmul(const DiaqMatrix<T> &a, const DiaqMatrix<T> &b,
                     T prune_eps) {
    if (a.n_dim() != b.n_dim()) {
        throw DimensionMismatch();
    }
    const size_t n = a.n_dim();

    // Group contributing pairs by result diagonal. Iterating both maps in
    // ascending order keeps each group in ascending (dA, dB) order.
    struct Task {
        DiagIndex dc;
        std::vector<std::pair<const Diagonal<T> *, const Diagonal<T> *>> pairs;
    };
    std::map<DiagIndex, size_t> slot;
    std::vector<Task> tasks;
    for (const auto &[da, diag_a] : a.diagonals()) {
        for (const auto &[db, diag_b] : b.diagonals()) {
            const DiagIndex dc = da + db;
            if (mag(dc) >= n ||
                pair_rows(da, db, static_cast<DiagIndex>(n)).empty()) {
                continue;
            }
            auto [it, inserted] = slot.try_emplace(dc, tasks.size());
            if (inserted) {
                tasks.push_back(Task{dc, {}});
            }
            tasks[it->second].pairs.emplace_back(&diag_a, &diag_b);
        }
    }

    std::vector<Diagonal<T>> results(tasks.size());
    const auto &k = simd::kernels<T>();
    const auto count = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic) num_threads(num_threads())
    for (std::int64_t t = 0; t < count; ++t) {
        const Task &task = tasks[static_cast<size_t>(t)];
        Diagonal<T> c(task.dc, n);
        for (const auto &[pa, pb] : task.pairs) {
            accumulate_pair(*pa, *pb, n, c, k);
        }
        results[static_cast<size_t>(t)] = std::move(c);
    }

    DiaqMatrix<T> out(n);
    for (auto &c : results) {
        if (!c.all_below(prune_eps)) {
            out.insert(std::move(c));
        }
    }
    return out;
}

template <class T>
PlanarVector<T> spmv(const DiaqMatrix<T> &a, const PlanarVector<T> &x) {
    const size_t n = a.n_dim();
    if (x.size() != n) {
        throw DimensionMismatch();
    }
    PlanarVector<T> y(n);
    const auto &k = simd::kernels<T>();

    // Rows are split into chunks; inside a chunk every diagonal is applied in
    // ascending order, so each y element sees the same summation order as a
    // sequential pass.
    constexpr size_t kChunk = size_t{1} << 14;
    const auto chunks = static_cast<std::int64_t>((n + kChunk - 1) / kChunk);
#pragma omp parallel for schedule(static) num_threads(num_threads())
    for (std::int64_t c = 0; c < chunks; ++c) {
        const size_t r0 = static_cast<size_t>(c) * kChunk;
        const size_t r1 = std::min(n, r0 + kChunk);
        for (const auto &[d, diag] : a.diagonals()) {
            const T *v_re = diag.values.re.data();
            const T *v_im = diag.values.im.data();
            if (d < 0) {
                // y[i - d] += v[i] * x[i]
                const size_t m = mag(d);
                const size_t lo = std::max(r0, m);
                if (lo >= r1) {
                    continue;
                }
                const size_t i = lo - m;
                k.cmac(v_re + i, v_im + i, x.re.data() + i, x.im.data() + i,
                       y.re.data() + lo, y.im.data() + lo, r1 - lo);
            } else {
                // y[i] += v[i] * x[i + d]
                const size_t len = diag.size();
                const size_t hi = std::min(r1, len);
                if (r0 >= hi) {
                    continue;
                }
                const size_t xi = r0 + static_cast<size_t>(d);
                k.cmac(v_re + r0, v_im + r0, x.re.data() + xi,
                       x.im.data() + xi, y.re.data() + r0, y.im.data() + r0,
                       hi - r0);
            }
        }
    }
    return y;
}

template <class T>
std::vector<std::complex<T>> spmv(const DiaqMatrix<T> &a,
                                  const std::vector<std::complex<T>> &x) {
    return spmv(a, PlanarVector<T>::from_complex(x)).to_complex();
}

template <class T> DiaqMatrix<T> transpose(const DiaqMatrix<T> &a) {
    DiaqMatrix<T> out(a.n_dim());
    for (const auto &[d, diag] : a.diagonals()) {
        Diagonal<T> t = diag;
        t.index = -d;
        out.insert(std::move(t));
    }
    return out;
}

template <class T> DiaqMatrix<T> adjoint(const DiaqMatrix<T> &a) {
    DiaqMatrix<T> out(a.n_dim());
    for (const auto &[d, diag] : a.diagonals()) {
        Diagonal<T> t = diag;
        t.index = -d;
        for (auto &v : t.values.im) {
            v = -v;
        }
        out.insert(std::move(t));
    }
    return out;
}

template <class T>
DiaqMatrix<T> kron(const DiaqMatrix<T> &a, const DiaqMatrix<T> &b) {
    const size_t na = a.n_dim();
    const size_t nb = b.n_dim();
    DiaqMatrix<T> out(na * nb);
    for (const auto &[da, diag_a] : a.diagonals()) {
        const size_t ra0 = da < 0 ? mag(da) : 0;
        for (const auto &[db, diag_b] : b.diagonals()) {
            const size_t rb0 = db < 0 ? mag(db) : 0;
            const DiagIndex d = da * static_cast<DiagIndex>(nb) + db;
            Diagonal<T> &dst = out.diagonal(d);
            for (size_t ka = 0; ka < diag_a.size(); ++ka) {
                const std::complex<T> va = diag_a.values[ka];
                const size_t ra = ra0 + ka;
                for (size_t kb = 0; kb < diag_b.size(); ++kb) {
                    const size_t r = ra * nb + rb0 + kb;
                    dst.values.set(diag_pos(r, d), va * diag_b.values[kb]);
                }
            }
        }
    }
    return out;
}

template <class T>
DiaqMatrix<T> kron_identity(size_t left_dim, const DiaqMatrix<T> &m,
                            size_t right_dim) {
    if (left_dim == 0 || right_dim == 0) {
        throw ShapeError("identity factors must have dimension >= 1");
    }
    const size_t nm = m.n_dim();
    const size_t block = nm * right_dim;
    DiaqMatrix<T> out(left_dim * block);
    for (const auto &[d, diag] : m.diagonals()) {
        Diagonal<T> dst(d * static_cast<DiagIndex>(right_dim), out.n_dim());
        const size_t len = diag.size();
        for (size_t a = 0; a < left_dim; ++a) {
            T *re = dst.values.re.data() + a * block;
            T *im = dst.values.im.data() + a * block;
            for (size_t i = 0; i < len; ++i) {
                std::fill_n(re + i * right_dim, right_dim, diag.values.re[i]);
                std::fill_n(im + i * right_dim, right_dim, diag.values.im[i]);
            }
        }
        out.insert(std::move(dst));
    }
    return out;
}

template <class T>
DiaqMatrix<T> add(const DiaqMatrix<T> &a, const DiaqMatrix<T> &b) {
    if (a.n_dim() != b.n_dim()) {
        throw ShapeError("add requires equal dimensions");
    }
    DiaqMatrix<T> out = a;
    for (const auto &[d, diag] : b.diagonals()) {
        Diagonal<T> &dst = out.diagonal(d);
        for (size_t k = 0; k < diag.size(); ++k) {
            dst.values.re[k] += diag.values.re[k];
            dst.values.im[k] += diag.values.im[k];
        }
    }
    return out;
}

template <class T>
DiaqMatrix<T> scale(const DiaqMatrix<T> &a, std::complex<T> s) {
    DiaqMatrix<T> out(a.n_dim());
    for (const auto &[d, diag] : a.diagonals()) {
        Diagonal<T> dst(d, a.n_dim());
        for (size_t k = 0; k < diag.size(); ++k) {
            const T re = diag.values.re[k];
            const T im = diag.values.im[k];
            dst.values.re[k] = s.real() * re - s.imag() * im;
            dst.values.im[k] = s.real() * im + s.imag() * re;
        }
        out.insert(std::move(dst));
    }
    return out;
}

template <class T> size_t nnz(const DiaqMatrix<T> &a, T eps) {
    size_t count = 0;
    for (const auto &[d, diag] : a.diagonals()) {
        for (size_t k = 0; k < diag.size(); ++k) {
            if (std::abs(diag.values.re[k]) + std::abs(diag.values.im[k]) >
                eps) {
                ++count;
            }
        }
    }
    return count;
}

template <class T> double sparsity(const DiaqMatrix<T> &a, T eps) {
    const auto n = static_cast<double>(a.n_dim());
    return 1.0 - static_cast<double>(nnz(a, eps)) / (n * n);
}

std::string_view format_name(StorageFormat f) noexcept {
    switch (f) {
    case StorageFormat::dense:
        return "dense";
    case StorageFormat::diaq:
        return "diaq";
    case StorageFormat::csr:
        return "csr";
    case StorageFormat::csc:
        return "csc";
    case StorageFormat::coo:
        return "coo";
    case StorageFormat::bsr:
        return "bsr";
    }
    return "unknown";
}

template <class T>
std::vector<MemoryEstimate> memory_estimates(const DiaqMatrix<T> &a, T eps) {
    const size_t n = a.n_dim();
    const size_t cv = 2 * sizeof(T);
    const size_t nz = nnz(a, eps);

    const size_t dense = n * n * cv;
    const size_t diaq = a.stored_values() * cv +
                        a.diag_count() * (kIndexBytes + kMapEntryOverhead);
    const size_t csr = nz * cv + nz * kIndexBytes + (n + 1) * kIndexBytes;
    const size_t coo = nz * (cv + 2 * kIndexBytes);

    // 2x2 blocks holding at least one non-zero.
    const size_t block_rows = (n + 1) / 2;
    std::unordered_set<std::uint64_t> blocks;
    for (const auto &[d, diag] : a.diagonals()) {
        const size_t r0 = d < 0 ? mag(d) : 0;
        for (size_t k = 0; k < diag.size(); ++k) {
            if (std::abs(diag.values.re[k]) + std::abs(diag.values.im[k]) >
                eps) {
                const size_t r = r0 + k;
                const size_t c = static_cast<size_t>(
                    static_cast<DiagIndex>(r) + d);
                blocks.insert(static_cast<std::uint64_t>(r / 2) * block_rows +
                              c / 2);
            }
        }
    }
    const size_t nblocks = blocks.size();
    const size_t bsr =
        nblocks * (4 * cv) + nblocks * kIndexBytes + (block_rows + 1) * kIndexBytes;

    return {{StorageFormat::dense, dense}, {StorageFormat::diaq, diaq},
            {StorageFormat::csr, csr},     {StorageFormat::csc, csr},
            {StorageFormat::coo, coo},     {StorageFormat::bsr, bsr}};
}

size_t bytes_of(const std::vector<MemoryEstimate> &estimates, StorageFormat f) {
    for (const auto &e : estimates) {
        if (e.format == f) {
            return e.bytes;
        }
    }
    throw RangeError("no estimate for format " + std::string(format_name(f)));
}

template <class T> T max_abs(const DiaqMatrix<T> &a) {
    T best{0};
    for (const auto &[d, diag] : a.diagonals()) {
        for (size_t k = 0; k < diag.size(); ++k) {
            best = std::max(best, std::abs(diag.values.re[k]) +
                                      std::abs(diag.values.im[k]));
        }
    }
    return best;
}

template <class T> DiaqMatrix<double> to_double(const DiaqMatrix<T> &a) {
    DiaqMatrix<double> out(a.n_dim());
    for (const auto &[d, diag] : a.diagonals()) {
        Diagonal<double> dst(d, a.n_dim());
        std::copy(diag.values.re.begin(), diag.values.re.end(),
                  dst.values.re.begin());
        std::copy(diag.values.im.begin(), diag.values.im.end(),
                  dst.values.im.begin());
        out.insert(std::move(dst));
    }
    return out;
}

template <class T> DiaqMatrix<T> from_double(const DiaqMatrix<double> &a) {
    DiaqMatrix<T> out(a.n_dim());
    for (const auto &[d, diag] : a.diagonals()) {
        Diagonal<T> dst(d, a.n_dim());
        for (size_t k = 0; k < diag.size(); ++k) {
            dst.values.re[k] = static_cast<T>(diag.values.re[k]);
            dst.values.im[k] = static_cast<T>(diag.values.im[k]);
        }
        out.insert(std::move(dst));
    }
    return out;
}

#define DIAQ_INSTANTIATE(T)                                                    \
    template DiaqMatrix<T> from_dense(const DenseMatrix<T> &, T);              \
    template DenseMatrix<T> to_dense(const DiaqMatrix<T> &);                   \
    template std::optional<Diagonal<T>> multiply_diagonals(                    \
        const Diagonal<T> &, const Diagonal<T> &, size_t);                     \
    template DiaqMatrix<T> matmul(const DiaqMatrix<T> &, const DiaqMatrix<T> &, \
                                  T);                                          \
    template PlanarVector<T> spmv(const DiaqMatrix<T> &,                       \
                                  const PlanarVector<T> &);                    \
    template std::vector<std::complex<T>> spmv(                                \
        const DiaqMatrix<T> &, const std::vector<std::complex<T>> &);          \
    template DiaqMatrix<T> transpose(const DiaqMatrix<T> &);                   \
    template DiaqMatrix<T> adjoint(const DiaqMatrix<T> &);                     \
    template DiaqMatrix<T> kron(const DiaqMatrix<T> &, const DiaqMatrix<T> &);  \
    template DiaqMatrix<T> kron_identity(size_t, const DiaqMatrix<T> &,        \
                                         size_t);                              \
    template DiaqMatrix<T> add(const DiaqMatrix<T> &, const DiaqMatrix<T> &);   \
    template DiaqMatrix<T> scale(const DiaqMatrix<T> &, std::complex<T>);      \
    template size_t nnz(const DiaqMatrix<T> &, T);                             \
    template double sparsity(const DiaqMatrix<T> &, T);                        \
    template std::vector<MemoryEstimate> memory_estimates(                     \
        const DiaqMatrix<T> &, T);                                             \
    template T max_abs(const DiaqMatrix<T> &);                                 \
    template DiaqMatrix<double> to_double(const DiaqMatrix<T> &);              \
    template DiaqMatrix<T> from_double(const DiaqMatrix<double> &);

DIAQ_INSTANTIATE(float)
DIAQ_INSTANTIATE(double)

#undef DIAQ_INSTANTIATE

} // namespace diaq
