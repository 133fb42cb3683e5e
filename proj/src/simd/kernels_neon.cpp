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

// AArch64 only. Same operation order as the scalar reference.
#include "diaq/simd/kernels.hpp"

#include <arm_neon.h>

namespace diaq::simd::detail {
namespace {

void cmac_neon_f64(const double *a_re, const double *a_im, const double *b_re,
                   const double *b_im, double *c_re, double *c_im,
                   std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t ar = vld1q_f64(a_re + i);
        const float64x2_t ai = vld1q_f64(a_im + i);
        const float64x2_t br = vld1q_f64(b_re + i);
        const float64x2_t bi = vld1q_f64(b_im + i);
        const float64x2_t re = vsubq_f64(vmulq_f64(ar, br), vmulq_f64(ai, bi));
        const float64x2_t im = vaddq_f64(vmulq_f64(ar, bi), vmulq_f64(ai, br));
        vst1q_f64(c_re + i, vaddq_f64(vld1q_f64(c_re + i), re));
        vst1q_f64(c_im + i, vaddq_f64(vld1q_f64(c_im + i), im));
    }
    for (; i < n; ++i) {
        c_re[i] += a_re[i] * b_re[i] - a_im[i] * b_im[i];
        c_im[i] += a_re[i] * b_im[i] + a_im[i] * b_re[i];
    }
}

void cmac_neon_f32(const float *a_re, const float *a_im, const float *b_re,
                   const float *b_im, float *c_re, float *c_im, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const float32x4_t ar = vld1q_f32(a_re + i);
        const float32x4_t ai = vld1q_f32(a_im + i);
        const float32x4_t br = vld1q_f32(b_re + i);
        const float32x4_t bi = vld1q_f32(b_im + i);
        const float32x4_t re = vsubq_f32(vmulq_f32(ar, br), vmulq_f32(ai, bi));
        const float32x4_t im = vaddq_f32(vmulq_f32(ar, bi), vmulq_f32(ai, br));
        vst1q_f32(c_re + i, vaddq_f32(vld1q_f32(c_re + i), re));
        vst1q_f32(c_im + i, vaddq_f32(vld1q_f32(c_im + i), im));
    }
    for (; i < n; ++i) {
        c_re[i] += a_re[i] * b_re[i] - a_im[i] * b_im[i];
        c_im[i] += a_re[i] * b_im[i] + a_im[i] * b_re[i];
    }
}

void axpy_neon_f64(double v_re, double v_im, const double *x_re,
                   const double *x_im, double *y_re, double *y_im,
                   std::size_t n) {
    const float64x2_t vr = vdupq_n_f64(v_re);
    const float64x2_t vi = vdupq_n_f64(v_im);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t xr = vld1q_f64(x_re + i);
        const float64x2_t xi = vld1q_f64(x_im + i);
        const float64x2_t re = vsubq_f64(vmulq_f64(vr, xr), vmulq_f64(vi, xi));
        const float64x2_t im = vaddq_f64(vmulq_f64(vr, xi), vmulq_f64(vi, xr));
        vst1q_f64(y_re + i, vaddq_f64(vld1q_f64(y_re + i), re));
        vst1q_f64(y_im + i, vaddq_f64(vld1q_f64(y_im + i), im));
    }
    for (; i < n; ++i) {
        y_re[i] += v_re * x_re[i] - v_im * x_im[i];
        y_im[i] += v_re * x_im[i] + v_im * x_re[i];
    }
}

void axpy_neon_f32(float v_re, float v_im, const float *x_re,
                   const float *x_im, float *y_re, float *y_im, std::size_t n) {
    const float32x4_t vr = vdupq_n_f32(v_re);
    const float32x4_t vi = vdupq_n_f32(v_im);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const float32x4_t xr = vld1q_f32(x_re + i);
        const float32x4_t xi = vld1q_f32(x_im + i);
        const float32x4_t re = vsubq_f32(vmulq_f32(vr, xr), vmulq_f32(vi, xi));
        const float32x4_t im = vaddq_f32(vmulq_f32(vr, xi), vmulq_f32(vi, xr));
        vst1q_f32(y_re + i, vaddq_f32(vld1q_f32(y_re + i), re));
        vst1q_f32(y_im + i, vaddq_f32(vld1q_f32(y_im + i), im));
    }
    for (; i < n; ++i) {
        y_re[i] += v_re * x_re[i] - v_im * x_im[i];
        y_im[i] += v_re * x_im[i] + v_im * x_re[i];
    }
}

} // namespace

template <> const KernelTable<double> &neon_table<double>() noexcept {
    static const KernelTable<double> table{&cmac_neon_f64, &axpy_neon_f64};
    return table;
}

template <> const KernelTable<float> &neon_table<float>() noexcept {
    static const KernelTable<float> table{&cmac_neon_f32, &axpy_neon_f32};
    return table;
}

} // namespace diaq::simd::detail
