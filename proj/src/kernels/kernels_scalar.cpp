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

#include "kernels_impl.hpp"

// Scalar reference path. Reductions use the same 4-lane blocked accumulation
// and lane-combine order as the AVX2 path so both produce identical bits.
namespace srnav::kernels::detail::scalar {

double dot(const double* a, const double* b, std::size_t n) {
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        s0 += a[i] * b[i];
        s1 += a[i + 1] * b[i + 1];
        s2 += a[i + 2] * b[i + 2];
        s3 += a[i + 3] * b[i + 3];
    }
    double r = (s0 + s2) + (s1 + s3);
    for (; i < n; ++i) r += a[i] * b[i];
    return r;
}

double sum(const double* a, std::size_t n) {
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        s0 += a[i];
        s1 += a[i + 1];
        s2 += a[i + 2];
        s3 += a[i + 3];
    }
    double r = (s0 + s2) + (s1 + s3);
    for (; i < n; ++i) r += a[i];
    return r;
}

double sum_sq_diff(const double* a, const double* b, std::size_t n) {
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const double d0 = a[i] - b[i];
        const double d1 = a[i + 1] - b[i + 1];
        const double d2 = a[i + 2] - b[i + 2];
        const double d3 = a[i + 3] - b[i + 3];
        s0 += d0 * d0;
        s1 += d1 * d1;
        s2 += d2 * d2;
        s3 += d3 * d3;
    }
    double r = (s0 + s2) + (s1 + s3);
    for (; i < n; ++i) {
        const double d = a[i] - b[i];
        r += d * d;
    }
    return r;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale(double* x, double alpha, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

void clamp01(double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        double v = std::min(x[i], 1.0);
        x[i] = std::max(v, 0.0);
    }
}

void conv1d_rows(const double* src, double* dst, int w, int h,
                 const double* taps, int ntaps) {
    for (int y = 0; y < h; ++y) {
        const double* row = src + static_cast<std::size_t>(y) * w;
        double* out = dst + static_cast<std::size_t>(y) * w;
        for (int x = 0; x < w; ++x) {
            out[x] = conv_sample_clamped(row, 1, w, x, taps, ntaps);
        }
    }
}

void conv1d_cols(const double* src, double* dst, int w, int h,
                 const double* taps, int ntaps) {
    for (int y = 0; y < h; ++y) {
        double* out = dst + static_cast<std::size_t>(y) * w;
        for (int x = 0; x < w; ++x) {
            out[x] = conv_sample_clamped(src + x, w, h, y, taps, ntaps);
        }
    }
}

void conv1d_rows_adjoint(const double* src, double* dst, int w, int h,
                         const double* taps, int ntaps) {
    for (int y = 0; y < h; ++y) {
        const double* row = src + static_cast<std::size_t>(y) * w;
        double* out = dst + static_cast<std::size_t>(y) * w;
        out[0] = conv_adjoint_border_lo(row, 1, w, taps, ntaps);
        for (int x = 1; x <= w - 2; ++x) {
            out[x] = conv_adjoint_sample(row, 1, w, x, taps, ntaps);
        }
        out[w - 1] = conv_adjoint_border_hi(row, 1, w, taps, ntaps);
    }
}

void conv1d_cols_adjoint(const double* src, double* dst, int w, int h,
                         const double* taps, int ntaps) {
    for (int y = 0; y < h; ++y) {
        double* out = dst + static_cast<std::size_t>(y) * w;
        if (y == 0) {
            for (int x = 0; x < w; ++x)
                out[x] = conv_adjoint_border_lo(src + x, w, h, taps, ntaps);
        } else if (y == h - 1) {
            for (int x = 0; x < w; ++x)
                out[x] = conv_adjoint_border_hi(src + x, w, h, taps, ntaps);
        } else {
            for (int x = 0; x < w; ++x)
                out[x] = conv_adjoint_sample(src + x, w, h, y, taps, ntaps);
        }
    }
}

void shift_bilinear(const double* src, double* dst, int w, int h,
                    double dx, double dy) {
    const ShiftAxis ax = shift_axis(dx);
    const ShiftAxis ay = shift_axis(dy);
    for (int y = 0; y < h; ++y) {
        double* out = dst + static_cast<std::size_t>(y) * w;
        for (int x = 0; x < w; ++x) {
            out[x] = shift_sample_clamped(src, w, h, x, y, ax, ay);
        }
    }
}

}  // namespace srnav::kernels::detail::scalar
