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
 * Planar complex inner loops shared by the matrix and state-vector code.
 *
 * Every kernel exists as a scalar reference plus instruction-set variants.
 * The variants evaluate exactly the same IEEE operations in the same order
 * as the reference (no fused multiply-add), so all variants produce
 * bitwise-identical results. The active variant is chosen once at startup
 * from the CPU features and can be overridden with DIAQ_ISA or set_isa().
 */
#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace diaq::simd {

enum class Isa { scalar, avx2, neon };

[[nodiscard]] std::string_view isa_name(Isa isa) noexcept;
[[nodiscard]] Isa parse_isa(std::string_view name);

/// True when the variant was compiled in and the running CPU supports it.
[[nodiscard]] bool isa_available(Isa isa) noexcept;
[[nodiscard]] std::vector<Isa> available_isas();

[[nodiscard]] Isa active_isa() noexcept;
/// Throws std::invalid_argument if the variant is not available.
void set_isa(Isa isa);

/// c[i] += a[i] * b[i] over planar complex arrays.
template <class T>
using CmacFn = void (*)(const T *a_re, const T *a_im, const T *b_re,
                        const T *b_im, T *c_re, T *c_im, std::size_t n);

/// y[i] += v * x[i] for a complex scalar v.
template <class T>
using AxpyFn = void (*)(T v_re, T v_im, const T *x_re, const T *x_im, T *y_re,
                        T *y_im, std::size_t n);

template <class T> struct KernelTable {
    CmacFn<T> cmac;
    AxpyFn<T> axpy;
};

/// Table for a specific variant. Throws if unavailable.
template <class T> [[nodiscard]] const KernelTable<T> &kernels_for(Isa isa);

/// Table for the active variant.
template <class T> [[nodiscard]] const KernelTable<T> &kernels();

namespace detail {
// Per-variant entry points; defined in kernels_<isa>.cpp.
template <class T> const KernelTable<T> &scalar_table() noexcept;
#if defined(DIAQ_HAVE_AVX2)
template <class T> const KernelTable<T> &avx2_table() noexcept;
#endif
#if defined(DIAQ_HAVE_NEON)
template <class T> const KernelTable<T> &neon_table() noexcept;
#endif
} // namespace detail

} // namespace diaq::simd
