// Copyright 2026-present the srnav project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>

// Internal declarations shared by the per-ISA translation units. The inline
// helpers below are used verbatim by both paths so that edge handling is
// bit-identical regardless of the active ISA.
namespace srnav::kernels::detail {

inline int clampi(int v, int lo, int hi) { return std::min(std::max(v, lo), hi); }

// One output sample of a replicate-padded convolution, sequential taps.
inline double conv_sample_clamped(const double* line, int stride, int n,
                                  int x, const double* taps, int ntaps) {
    const int c = ntaps / 2;
    double acc = 0.0;
    for (int k = 0; k < ntaps; ++k) {
        acc += taps[k] * line[static_cast<std::size_t>(clampi(x - c + k, 0, n - 1)) * stride];
    }
    return acc;
}

// One interior sample of the adjoint: taps flipped, out-of-range reads are zero.
inline double conv_adjoint_sample(const double* line, int stride, int n,
                                  int x, const double* taps, int ntaps) {
    const int c = ntaps / 2;
    double acc = 0.0;
    for (int k = 0; k < ntaps; ++k) {
        const int i = x + c - k;
        if (i >= 0 && i < n) acc += taps[k] * line[static_cast<std::size_t>(i) * stride];
    }
    return acc;
}

// Adjoint samples at the padded borders. Forward index clamp(i - c + k) hits 0
// for every i <= c - k and hits n-1 for every i >= n - 1 + c - k, so the two
// border outputs integrate runs of the input.
inline double conv_adjoint_border_lo(const double* line, int stride, int n,
                                     const double* taps, int ntaps) {
    const int c = ntaps / 2;
    double acc = 0.0;
    for (int k = 0; k < ntaps; ++k) {
        const int hi = std::min(n - 1, c - k);
        double run = 0.0;
        for (int i = 0; i <= hi; ++i) run += line[static_cast<std::size_t>(i) * stride];
        acc += taps[k] * run;
    }
    return acc;
}

inline double conv_adjoint_border_hi(const double* line, int stride, int n,
                                     const double* taps, int ntaps) {
    const int c = ntaps / 2;
    double acc = 0.0;
    for (int k = 0; k < ntaps; ++k) {
        const int lo = std::max(0, n - 1 + c - k);
        double run = 0.0;
        for (int i = lo; i <= n - 1; ++i) run += line[static_cast<std::size_t>(i) * stride];
        acc += taps[k] * run;
    }
    return acc;
}

// Decomposition of a uniform bilinear shift along one axis: the source column
// for output x is x + off (weight w0) and x + off + 1 (weight w1), clamped.
struct ShiftAxis {
    int off;
    double w0, w1;
};

inline ShiftAxis shift_axis(double d) {
    ShiftAxis a;
    const double s = -d;
    const double f = std::floor(s);
    a.off = static_cast<int>(f);
    a.w1 = s - f;
    a.w0 = 1.0 - a.w1;
    return a;
}

inline double shift_sample_clamped(const double* src, int w, int h, int x, int y,
                                   const ShiftAxis& ax, const ShiftAxis& ay) {
    const int x0 = clampi(x + ax.off, 0, w - 1);
    const int x1 = clampi(x + ax.off + 1, 0, w - 1);
    const int y0 = clampi(y + ay.off, 0, h - 1);
    const int y1 = clampi(y + ay.off + 1, 0, h - 1);
    const double* r0 = src + static_cast<std::size_t>(y0) * w;
    const double* r1 = src + static_cast<std::size_t>(y1) * w;
    const double t0 = ax.w0 * r0[x0] + ax.w1 * r0[x1];
    const double t1 = ax.w0 * r1[x0] + ax.w1 * r1[x1];
    return ay.w0 * t0 + ay.w1 * t1;
}

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
double sum(const double* a, std::size_t n);
double sum_sq_diff(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scale(double* x, double alpha, std::size_t n);
void clamp01(double* x, std::size_t n);
void conv1d_rows(const double* src, double* dst, int w, int h, const double* taps, int ntaps);
void conv1d_cols(const double* src, double* dst, int w, int h, const double* taps, int ntaps);
void conv1d_rows_adjoint(const double* src, double* dst, int w, int h, const double* taps, int ntaps);
void conv1d_cols_adjoint(const double* src, double* dst, int w, int h, const double* taps, int ntaps);
void shift_bilinear(const double* src, double* dst, int w, int h, double dx, double dy);
}  // namespace scalar

#if defined(SRNAV_HAVE_AVX2)
namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
double sum(const double* a, std::size_t n);
double sum_sq_diff(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scale(double* x, double alpha, std::size_t n);
void clamp01(double* x, std::size_t n);
void conv1d_rows(const double* src, double* dst, int w, int h, const double* taps, int ntaps);
void conv1d_cols(const double* src, double* dst, int w, int h, const double* taps, int ntaps);
void conv1d_rows_adjoint(const double* src, double* dst, int w, int h, const double* taps, int ntaps);
void conv1d_cols_adjoint(const double* src, double* dst, int w, int h, const double* taps, int ntaps);
void shift_bilinear(const double* src, double* dst, int w, int h, double dx, double dy);
}  // namespace avx2
#endif

}  // namespace srnav::kernels::detail
