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

#if defined(SRNAV_HAVE_AVX2)

#include <immintrin.h>

// AVX2 path. No FMA: each step is an explicit multiply then add, matching the
// scalar reference operation for operation so results are bit-identical.
namespace srnav::kernels::detail::avx2 {

namespace {

// Combines the four lane accumulators as (s0 + s2) + (s1 + s3), the order the
// scalar path mirrors.
inline double hsum(__m256d acc) {
    const __m128d lo = _mm256_castpd256_pd128(acc);
    const __m128d hi = _mm256_extractf128_pd(acc, 1);
    const __m128d t = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(t) + _mm_cvtsd_f64(_mm_unpackhi_pd(t, t));
}

}  // namespace

double dot(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a + i),
                                               _mm256_loadu_pd(b + i)));
    }
    double r = hsum(acc);
    for (; i < n; ++i) r += a[i] * b[i];
    return r;
}

double sum(const double* a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_add_pd(acc, _mm256_loadu_pd(a + i));
    }
    double r = hsum(acc);
    for (; i < n; ++i) r += a[i];
    return r;
}

double sum_sq_diff(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i),
                                        _mm256_loadu_pd(b + i));
        acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
    }
    double r = hsum(acc);
    for (; i < n; ++i) {
        const double d = a[i] - b[i];
        r += d * d;
    }
    return r;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    const __m256d av = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d t = _mm256_add_pd(_mm256_loadu_pd(y + i),
                                        _mm256_mul_pd(av, _mm256_loadu_pd(x + i)));
        _mm256_storeu_pd(y + i, t);
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale(double* x, double alpha, std::size_t n) {
    const __m256d av = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(x + i, _mm256_mul_pd(_mm256_loadu_pd(x + i), av));
    }
    for (; i < n; ++i) x[i] *= alpha;
}

void clamp01(double* x, std::size_t n) {
    const __m256d ones = _mm256_set1_pd(1.0);
    const __m256d zeros = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_loadu_pd(x + i);
        v = _mm256_min_pd(v, ones);
        v = _mm256_max_pd(v, zeros);
        _mm256_storeu_pd(x + i, v);
    }
    for (; i < n; ++i) {
        double v = std::min(x[i], 1.0);
        x[i] = std::max(v, 0.0);
    }
}

void conv1d_rows(const double* src, double* dst, int w, int h,
                 const double* taps, int ntaps) {
    const int c = ntaps / 2;
    const int xlo = c;
    const int xhi = w - ntaps + c;  // inclusive; stencil fully in range
    for (int y = 0; y < h; ++y) {
        const double* row = src + static_cast<std::size_t>(y) * w;
        double* out = dst + static_cast<std::size_t>(y) * w;
        int x = 0;
        const int lead = std::min(xlo, w);
        for (; x < lead; ++x) out[x] = conv_sample_clamped(row, 1, w, x, taps, ntaps);
        for (; x + 3 <= xhi; x += 4) {
            const double* base = row + x - c;
            __m256d acc = _mm256_setzero_pd();
            for (int k = 0; k < ntaps; ++k) {
                acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_set1_pd(taps[k]),
                                                       _mm256_loadu_pd(base + k)));
            }
            _mm256_storeu_pd(out + x, acc);
        }
        for (; x < w; ++x) out[x] = conv_sample_clamped(row, 1, w, x, taps, ntaps);
    }
}

void conv1d_cols(const double* src, double* dst, int w, int h,
                 const double* taps, int ntaps) {
    const int c = ntaps / 2;
    for (int y = 0; y < h; ++y) {
        double* out = dst + static_cast<std::size_t>(y) * w;
        int x = 0;
        for (; x + 3 <= w - 1; x += 4) {
            __m256d acc = _mm256_setzero_pd();
            for (int k = 0; k < ntaps; ++k) {
                const double* row =
                    src + static_cast<std::size_t>(clampi(y - c + k, 0, h - 1)) * w;
                acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_set1_pd(taps[k]),
                                                       _mm256_loadu_pd(row + x)));
            }
            _mm256_storeu_pd(out + x, acc);
        }
        for (; x < w; ++x) out[x] = conv_sample_clamped(src + x, w, h, y, taps, ntaps);
    }
}

void conv1d_rows_adjoint(const double* src, double* dst, int w, int h,
                         const double* taps, int ntaps) {
    const int c = ntaps / 2;
    const int full_lo = std::max(1, ntaps - 1 - c);
    const int full_hi = std::min(w - 2, w - 1 - c);
    for (int y = 0; y < h; ++y) {
        const double* row = src + static_cast<std::size_t>(y) * w;
        double* out = dst + static_cast<std::size_t>(y) * w;
        out[0] = conv_adjoint_border_lo(row, 1, w, taps, ntaps);
        int x = 1;
        const int lead = std::min(full_lo, w - 1);
        for (; x < lead; ++x) out[x] = conv_adjoint_sample(row, 1, w, x, taps, ntaps);
        for (; x + 3 <= full_hi; x += 4) {
            const double* base = row + x + c;
            __m256d acc = _mm256_setzero_pd();
            for (int k = 0; k < ntaps; ++k) {
                acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_set1_pd(taps[k]),
                                                       _mm256_loadu_pd(base - k)));
            }
            _mm256_storeu_pd(out + x, acc);
        }
        for (; x <= w - 2; ++x) out[x] = conv_adjoint_sample(row, 1, w, x, taps, ntaps);
        out[w - 1] = conv_adjoint_border_hi(row, 1, w, taps, ntaps);
    }
}

void conv1d_cols_adjoint(const double* src, double* dst, int w, int h,
                         const double* taps, int ntaps) {
    const int c = ntaps / 2;
    for (int y = 0; y < h; ++y) {
        double* out = dst + static_cast<std::size_t>(y) * w;
        if (y == 0 || y == h - 1) {
            const bool lo = (y == 0);
            int x = 0;
            for (; x + 3 <= w - 1; x += 4) {
                __m256d acc = _mm256_setzero_pd();
                for (int k = 0; k < ntaps; ++k) {
                    const int jlo = lo ? 0 : std::max(0, h - 1 + c - k);
                    const int jhi = lo ? std::min(h - 1, c - k) : h - 1;
                    __m256d run = _mm256_setzero_pd();
                    for (int j = jlo; j <= jhi; ++j) {
                        run = _mm256_add_pd(
                            run, _mm256_loadu_pd(src + static_cast<std::size_t>(j) * w + x));
                    }
                    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_set1_pd(taps[k]), run));
                }
                _mm256_storeu_pd(out + x, acc);
            }
            for (; x < w; ++x) {
                out[x] = lo ? conv_adjoint_border_lo(src + x, w, h, taps, ntaps)
                            : conv_adjoint_border_hi(src + x, w, h, taps, ntaps);
            }
        } else {
            int x = 0;
            for (; x + 3 <= w - 1; x += 4) {
                __m256d acc = _mm256_setzero_pd();
                for (int k = 0; k < ntaps; ++k) {
                    const int j = y + c - k;
                    if (j < 0 || j >= h) continue;
                    acc = _mm256_add_pd(
                        acc, _mm256_mul_pd(_mm256_set1_pd(taps[k]),
                                           _mm256_loadu_pd(src + static_cast<std::size_t>(j) * w + x)));
                }
                _mm256_storeu_pd(out + x, acc);
            }
            for (; x < w; ++x) out[x] = conv_adjoint_sample(src + x, w, h, y, taps, ntaps);
        }
    }
}

void shift_bilinear(const double* src, double* dst, int w, int h,
                    double dx, double dy) {
    const ShiftAxis ax = shift_axis(dx);
    const ShiftAxis ay = shift_axis(dy);
    const int ilo = std::max(0, -ax.off);
    const int ihi = std::min(w - 1, w - 2 - ax.off);  // inclusive; no x clamping
    const __m256d wx0 = _mm256_set1_pd(ax.w0);
    const __m256d wx1 = _mm256_set1_pd(ax.w1);
    const __m256d wy0 = _mm256_set1_pd(ay.w0);
    const __m256d wy1 = _mm256_set1_pd(ay.w1);
    for (int y = 0; y < h; ++y) {
        const double* r0 =
            src + static_cast<std::size_t>(clampi(y + ay.off, 0, h - 1)) * w;
        const double* r1 =
            src + static_cast<std::size_t>(clampi(y + ay.off + 1, 0, h - 1)) * w;
        double* out = dst + static_cast<std::size_t>(y) * w;
        int x = 0;
        const int lead = std::min(ilo, w);
        for (; x < lead; ++x) out[x] = shift_sample_clamped(src, w, h, x, y, ax, ay);
        for (; x + 3 <= ihi; x += 4) {
            const double* p0 = r0 + x + ax.off;
            const double* p1 = r1 + x + ax.off;
            const __m256d t0 = _mm256_add_pd(_mm256_mul_pd(wx0, _mm256_loadu_pd(p0)),
                                             _mm256_mul_pd(wx1, _mm256_loadu_pd(p0 + 1)));
            const __m256d t1 = _mm256_add_pd(_mm256_mul_pd(wx0, _mm256_loadu_pd(p1)),
                                             _mm256_mul_pd(wx1, _mm256_loadu_pd(p1 + 1)));
            _mm256_storeu_pd(out + x,
                             _mm256_add_pd(_mm256_mul_pd(wy0, t0), _mm256_mul_pd(wy1, t1)));
        }
        for (; x < w; ++x) out[x] = shift_sample_clamped(src, w, h, x, y, ax, ay);
    }
}

}  // namespace srnav::kernels::detail::avx2

#endif  // SRNAV_HAVE_AVX2
