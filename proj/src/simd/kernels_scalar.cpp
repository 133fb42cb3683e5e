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

#include "diaq/simd/kernels.hpp"

namespace diaq::simd::detail {
namespace {

template <class T>
void cmac_scalar(const T *a_re, const T *a_im, const T *b_re, const T *b_im,
                 T *c_re, T *c_im, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const T ar = a_re[i];
        const T ai = a_im[i];
        const T br = b_re[i];
        const T bi = b_im[i];
        c_re[i] += ar * br - ai * bi;
        c_im[i] += ar * bi + ai * br;
    }
}

template <class T>
void axpy_scalar(T v_re, T v_im, const T *x_re, const T *x_im, T *y_re,
                 T *y_im, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const T xr = x_re[i];
        const T xi = x_im[i];
        y_re[i] += v_re * xr - v_im * xi;
        y_im[i] += v_re * xi + v_im * xr;
    }
}

} // namespace

template <class T> const KernelTable<T> &scalar_table() noexcept {
    static const KernelTable<T> table{&cmac_scalar<T>, &axpy_scalar<T>};
    return table;
}

template const KernelTable<float> &scalar_table<float>() noexcept;
template const KernelTable<double> &scalar_table<double>() noexcept;

} // namespace diaq::simd::detail
