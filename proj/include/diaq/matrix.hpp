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
 * The DiaQ container: a square complex matrix stored as an ordered map from
 * diagonal index to a full planar (real/imag) diagonal.
 *
 * Index convention: the diagonal index of element (r, c) is d = c - r.
 * Position k of diagonal d holds element (k, k + d) for d >= 0 and
 * (k - d, k) for d < 0, i.e. k = r + min(d, 0). Diagonal d of an N x N
 * matrix always stores N - |d| values, zeros included.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "aligned.hpp"

namespace diaq {

using DiagIndex = std::int64_t;

/// Number of values on diagonal d of an n x n matrix. Throws RangeError
/// when |d| > n - 1.
[[nodiscard]] std::size_t diag_len(DiagIndex d, std::size_t n_dim);

/// Storage position of element (row, col); the caller guarantees it lies
/// inside the matrix.
[[nodiscard]] constexpr std::size_t diag_pos(std::size_t row,
                                             DiagIndex d) noexcept {
    return d < 0 ? row - static_cast<std::size_t>(-d) : row;
}

/// Planar complex vector. Used for diagonals and state vectors alike.
template <class T> struct PlanarVector {
    AlignedVector<T> re;
    AlignedVector<T> im;

    PlanarVector() = default;
    explicit PlanarVector(std::size_t n) : re(n, T{0}), im(n, T{0}) {}

    [[nodiscard]] std::size_t size() const noexcept { return re.size(); }
    [[nodiscard]] std::complex<T> operator[](std::size_t i) const {
        return {re[i], im[i]};
    }
    void set(std::size_t i, std::complex<T> v) {
        re[i] = v.real();
        im[i] = v.imag();
    }

    [[nodiscard]] static PlanarVector
    from_complex(const std::vector<std::complex<T>> &v);
    [[nodiscard]] std::vector<std::complex<T>> to_complex() const;

    friend bool operator==(const PlanarVector &a, const PlanarVector &b) {
        return a.re == b.re && a.im == b.im;
    }
};

template <class T> struct Diagonal {
    DiagIndex index = 0;
    PlanarVector<T> values;

    Diagonal() = default;
    /// Zero-filled diagonal of the correct length for n_dim.
    Diagonal(DiagIndex d, std::size_t n_dim)
        : index(d), values(diag_len(d, n_dim)) {}

    [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
    [[nodiscard]] bool all_below(T eps) const noexcept;

    friend bool operator==(const Diagonal &, const Diagonal &) = default;
};

/// Row-major dense square-or-rectangular complex matrix. Only used at the
/// conversion boundary and by the dense backend.
template <class T> struct DenseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::complex<T>> data;

    DenseMatrix() = default;
    DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    [[nodiscard]] std::complex<T> &operator()(std::size_t r, std::size_t c) {
        return data[r * cols + c];
    }
    [[nodiscard]] const std::complex<T> &operator()(std::size_t r,
                                                    std::size_t c) const {
        return data[r * cols + c];
    }
    friend bool operator==(const DenseMatrix &, const DenseMatrix &) = default;
};

template <class T> class DiaqMatrix {
  public:
    using value_type = T;
    using complex_type = std::complex<T>;
    using map_type = std::map<DiagIndex, Diagonal<T>>;

    explicit DiaqMatrix(std::size_t n_dim = 1);

    [[nodiscard]] static DiaqMatrix identity(std::size_t n_dim);

    [[nodiscard]] std::size_t n_dim() const noexcept { return n_; }
    [[nodiscard]] std::size_t diag_count() const noexcept {
        return diags_.size();
    }
    [[nodiscard]] const map_type &diagonals() const noexcept { return diags_; }
    [[nodiscard]] std::size_t stored_values() const noexcept;

    /// nullptr when the diagonal is absent (all-zero).
    [[nodiscard]] const Diagonal<T> *find(DiagIndex d) const;
    [[nodiscard]] Diagonal<T> *find(DiagIndex d);

    /// Existing diagonal, or a newly inserted zero diagonal.
    Diagonal<T> &diagonal(DiagIndex d);

    /// Inserts or replaces. Throws ShapeError when the length does not match.
    void insert(Diagonal<T> diag);
    void erase(DiagIndex d) { diags_.erase(d); }

    /// Element access; absent diagonals read as zero.
    [[nodiscard]] complex_type at(std::size_t row, std::size_t col) const;
    void set(std::size_t row, std::size_t col, complex_type v);

    /// Drops every diagonal whose entries all satisfy |re| + |im| <= eps.
    void prune(T eps);

    friend bool operator==(const DiaqMatrix &, const DiaqMatrix &) = default;

  private:
    std::size_t n_;
    map_type diags_;
};

extern template struct PlanarVector<float>;
extern template struct PlanarVector<double>;
extern template struct Diagonal<float>;
extern template struct Diagonal<double>;
extern template class DiaqMatrix<float>;
extern template class DiaqMatrix<double>;

} // namespace diaq
