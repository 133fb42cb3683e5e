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

// Compiled with -mavx2 only; reached through runtime dispatch.
#include "diaq/simd/kernels.hpp"

#include <immintrin.h>

namespace diaq::simd::detail {
namespace {

// Products and sums are issued as separate mul/sub/add (never fmadd) so that
// lanes round exactly like the scalar reference.

void cmac_avx2_f64(const double *a_re, const double *a_im, const double *b_re,
                   const double *b_im, double *c_re, double *c_im,
                   std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d ar = _mm256_loadu_pd(a_re + i);
        const __m256d ai = _mm256_loadu_pd(a_im + i);
        const __m256d br = _mm256_loadu_pd(b_re + i);
        const __m256d bi = _mm256_loadu_pd(b_im + i);
        const __m256d re =
            _mm256_sub_pd(_mm256_mul_pd(ar, br), _mm256_mul_pd(ai, bi));
        const __m256d im =
            _mm256_add_pd(_mm256_mul_pd(ar, bi), _mm256_mul_pd(ai, br));
        _mm256_storeu_pd(c_re + i, _mm256_add_pd(_mm256_loadu_pd(c_re + i), re));
        _mm256_storeu_pd(c_im + i, _mm256_add_pd(_mm256_loadu_pd(c_im + i), im));
    }
    for (; i < n; ++i) {
        c_re[i] += a_re[i] * b_re[i] - a_im[i] * b_im[i];
        c_im[i] += a_re[i] * b_im[i] + a_im[i] * b_re[i];
    }
}

void cmac_avx2_f32(const float *a_re, const float *a_im, const float *b_re,
                   const float *b_im, float *c_re, float *c_im, std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256 ar = _mm256_loadu_ps(a_re + i);
        const __m256 ai = _mm256_loadu_ps(a_im + i);
        const __m256 br = _mm256_loadu_ps(b_re + i);
        const __m256 bi = _mm256_loadu_ps(b_im + i);
        const __m256 re =
            _mm256_sub_ps(_mm256_mul_ps(ar, br), _mm256_mul_ps(ai, bi));
        const __m256 im =
            _mm256_add_ps(_mm256_mul_ps(ar, bi), _mm256_mul_ps(ai, br));
        _mm256_storeu_ps(c_re + i, _mm256_add_ps(_mm256_loadu_ps(c_re + i), re));
        _mm256_storeu_ps(c_im + i, _mm256_add_ps(_mm256_loadu_ps(c_im + i), im));
    }
    for (; i < n; ++i) {
        c_re[i] += a_re[i] * b_re[i] - a_im[i] * b_im[i];
        c_im[i] += a_re[i] * b_im[i] + a_im[i] * b_re[i];
    }
}

void axpy_avx2_f64(double v_re, double v_im, const double *x_re,
                   const double *x_im, double *y_re, double *y_im,
                   std::size_t n) {
    const __m256d vr = _mm256_set1_pd(v_re);
    const __m256d vi = _mm256_set1_pd(v_im);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d xr = _mm256_loadu_pd(x_re + i);
        const __m256d xi = _mm256_loadu_pd(x_im + i);
        const __m256d re =
            _mm256_sub_pd(_mm256_mul_pd(vr, xr), _mm256_mul_pd(vi, xi));
        const __m256d im =
            _mm256_add_pd(_mm256_mul_pd(vr, xi), _mm256_mul_pd(vi, xr));
        _mm256_storeu_pd(y_re + i, _mm256_add_pd(_mm256_loadu_pd(y_re + i), re));
        _mm256_storeu_pd(y_im + i, _mm256_add_pd(_mm256_loadu_pd(y_im + i), im));
    }
    for (; i < n; ++i) {
        y_re[i] += v_re * x_re[i] - v_im * x_im[i];
        y_im[i] += v_re * x_im[i] + v_im * x_re[i];
    }
}

void axpy_avx2_f32(float v_re, float v_im, const float *x_re,
                   const float *x_im, float *y_re, float *y_im, std::size_t n) {
    const __m256 vr = _mm256_set1_ps(v_re);
    const __m256 vi = _mm256_set1_ps(v_im);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256 xr = _mm256_loadu_ps(x_re + i);
        const __m256 xi = _mm256_loadu_ps(x_im + i);
        const __m256 re =
            _mm256_sub_ps(_mm256_mul_ps(vr, xr), _mm256_mul_ps(vi, xi));
        const __m256 im =
            _mm256_add_ps(_mm256_mul_ps(vr, xi), _mm256_mul_ps(vi, xr));
        _mm256_storeu_ps(y_re + i, _mm256_add_ps(_mm256_loadu_ps(y_re + i), re));
        _mm256_storeu_ps(y_im + i, _mm256_add_ps(_mm256_loadu_ps(y_im + i), im));
    }
    for (; i < n; ++i) {
        y_re[i] += v_re * x_re[i] - v_im * x_im[i];
        y_im[i] += v_re * x_im[i] + v_im * x_re[i];
    }
}

} // namespace

template <> const KernelTable<double> &avx2_table<double>() noexcept {
    static const KernelTable<double> table{&cmac_avx2_f64, &axpy_avx2_f64};
    return table;
}

template <> const KernelTable<float> &avx2_table<float>() noexcept {
    static const KernelTable<float> table{&cmac_avx2_f32, &axpy_avx2_f32};
    return table;
}

} // namespace diaq::simd::detail
