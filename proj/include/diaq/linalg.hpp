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
 * Diagonal-structured kernels over DiaqMatrix: conversions, products,
 * Kronecker constructions, transpose, and sparsity accounting.
 *
 * All kernels take immutable inputs and return fresh outputs. Internal
 * parallelism never changes results: every output element is accumulated
 * in ascending diagonal order whatever the worker count.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "matrix.hpp"

namespace diaq {

/// Default threshold for dropping result diagonals after matmul.
inline constexpr double kMatmulPruneEps = 1e-15;

/// Diagonals of m with at least one entry |re| + |im| > eps. Throws
/// ShapeError for non-square input.
template <class T>
[[nodiscard]] DiaqMatrix<T> from_dense(const DenseMatrix<T> &m, T eps = T{0});

template <class T> [[nodiscard]] DenseMatrix<T> to_dense(const DiaqMatrix<T> &a);

/**
 * Product of two diagonals of n_dim x n_dim matrices. Returns nothing when
 * the result diagonal index falls outside the matrix or no row contributes.
 * The returned diagonal is full length; only the contributing rows are
 * non-zero.
 */
template <class T>
[[nodiscard]] std::optional<Diagonal<T>>
multiply_diagonals(const Diagonal<T> &a, const Diagonal<T> &b,
                   std::size_t n_dim);

/**
 * A x B. Contributions of the diagonal pair (dA, dB) land on dA + dB and
 * are summed in ascending (dA, dB) order. Result diagonals whose entries
 * all fall below prune_eps are dropped. Throws DimensionMismatch.
 */
template <class T>
[[nodiscard]] DiaqMatrix<T> matmul(const DiaqMatrix<T> &a,
                                   const DiaqMatrix<T> &b,
                                   T prune_eps = T(kMatmulPruneEps));

/// A x. Throws DimensionMismatch when sizes differ.
template <class T>
[[nodiscard]] PlanarVector<T> spmv(const DiaqMatrix<T> &a,
                                   const PlanarVector<T> &x);

template <class T>
[[nodiscard]] std::vector<std::complex<T>>
spmv(const DiaqMatrix<T> &a, const std::vector<std::complex<T>> &x);

/// Diagonal d becomes diagonal -d; value arrays are reused as-is.
template <class T> [[nodiscard]] DiaqMatrix<T> transpose(const DiaqMatrix<T> &a);

/// Conjugate transpose.
template <class T> [[nodiscard]] DiaqMatrix<T> adjoint(const DiaqMatrix<T> &a);

template <class T>
[[nodiscard]] DiaqMatrix<T> kron(const DiaqMatrix<T> &a, const DiaqMatrix<T> &b);

/**
 * I_left (x) m (x) I_right without a generic Kronecker product. Diagonal d of
 * m becomes diagonal d * right_dim; inside each of the left_dim blocks every
 * value is repeated right_dim times, blocks separated by |d| * right_dim
 * explicit zeros.
 */
template <class T>
[[nodiscard]] DiaqMatrix<T> kron_identity(std::size_t left_dim,
                                          const DiaqMatrix<T> &m,
                                          std::size_t right_dim);

/// Elementwise sum over the union of diagonal sets. Throws ShapeError.
template <class T>
[[nodiscard]] DiaqMatrix<T> add(const DiaqMatrix<T> &a, const DiaqMatrix<T> &b);

template <class T>
[[nodiscard]] DiaqMatrix<T> scale(const DiaqMatrix<T> &a, std::complex<T> s);

/// Stored entries with |re| + |im| > eps.
template <class T> [[nodiscard]] std::size_t nnz(const DiaqMatrix<T> &a, T eps);

/// 1 - nnz / N^2.
template <class T> [[nodiscard]] double sparsity(const DiaqMatrix<T> &a, T eps);

enum class StorageFormat { dense, diaq, csr, csc, coo, bsr };

[[nodiscard]] std::string_view format_name(StorageFormat f) noexcept;

struct MemoryEstimate {
    StorageFormat format;
    std::size_t bytes;
    friend bool operator==(const MemoryEstimate &,
                           const MemoryEstimate &) = default;
};

/// Bytes per stored index and per diagonal-map entry.
inline constexpr std::size_t kIndexBytes = 8;
inline constexpr std::size_t kMapEntryOverhead = 16;

/**
 * Closed-form footprints for the six formats, in the order dense, diaq, csr,
 * csc, coo, bsr. A complex value costs 2 * sizeof(T). BSR uses 2 x 2 blocks.
 */
template <class T>
[[nodiscard]] std::vector<MemoryEstimate> memory_estimates(const DiaqMatrix<T> &a,
                                                           T eps);

[[nodiscard]] std::size_t bytes_of(const std::vector<MemoryEstimate> &estimates,
                                   StorageFormat f);

/// Largest |re| + |im| over stored values; 0 for an empty map.
template <class T> [[nodiscard]] T max_abs(const DiaqMatrix<T> &a);

template <class T>
[[nodiscard]] DiaqMatrix<double> to_double(const DiaqMatrix<T> &a);
template <class T>
[[nodiscard]] DiaqMatrix<T> from_double(const DiaqMatrix<double> &a);

} // namespace diaq
