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

#include "srnav/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>
#include <string_view>

#include "kernels_impl.hpp"

namespace srnav::kernels {

namespace {

Isa detect_default() {
    const Isa best = isa_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar;
    if (const char* env = std::getenv("SRNAV_ISA")) {
        const std::string_view v(env);
        if (v == "scalar") return Isa::scalar;
        if (v == "avx2" && isa_supported(Isa::avx2)) return Isa::avx2;
    }
    return best;
}

std::atomic<Isa>& active_slot() {
    static std::atomic<Isa> slot{detect_default()};
    return slot;
}

void check_conv_args(int w, int h, const double* taps, int ntaps) {
    if (w < 2 || h < 2) throw std::invalid_argument("conv1d: image must be at least 2x2");
    if (taps == nullptr || ntaps < 1 || ntaps % 2 == 0)
        throw std::invalid_argument("conv1d: tap count must be odd and positive");
}

void check_factor_args(int w, int h, int factor) {
    if (factor < 1) throw std::invalid_argument("resample: factor must be >= 1");
    if (w % factor != 0 || h % factor != 0)
        throw std::invalid_argument("resample: dimensions not divisible by factor");
}

}  // namespace

const char* isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
    }
    return "unknown";
}

bool isa_supported(Isa isa) {
    if (isa == Isa::scalar) return true;
#if defined(SRNAV_HAVE_AVX2)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

Isa active_isa() { return active_slot().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
    if (!isa_supported(isa)) {
        throw std::runtime_error(std::string("ISA not supported on this host: ") +
                                 isa_name(isa));
    }
    active_slot().store(isa, std::memory_order_relaxed);
}

#if defined(SRNAV_HAVE_AVX2)
#define SRNAV_DISPATCH(fn, ...)                                            \
    do {                                                                   \
        if (active_isa() == Isa::avx2) return detail::avx2::fn(__VA_ARGS__); \
        return detail::scalar::fn(__VA_ARGS__);                            \
    } while (0)
#else
#define SRNAV_DISPATCH(fn, ...) return detail::scalar::fn(__VA_ARGS__)
#endif

double dot(const double* a, const double* b, std::size_t n) {
    SRNAV_DISPATCH(dot, a, b, n);
}

double sum(const double* a, std::size_t n) { SRNAV_DISPATCH(sum, a, n); }

double sum_sq_diff(const double* a, const double* b, std::size_t n) {
    SRNAV_DISPATCH(sum_sq_diff, a, b, n);
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    SRNAV_DISPATCH(axpy, alpha, x, y, n);
}

void scale(double* x, double alpha, std::size_t n) {
    SRNAV_DISPATCH(scale, x, alpha, n);
}

void clamp01(double* x, std::size_t n) { SRNAV_DISPATCH(clamp01, x, n); }

void conv1d_rows(const double* src, double* dst, int w, int h,
                 const double* taps, int ntaps) {
    check_conv_args(w, h, taps, ntaps);
    SRNAV_DISPATCH(conv1d_rows, src, dst, w, h, taps, ntaps);
}

void conv1d_cols(const double* src, double* dst, int w, int h,
                 const double* taps, int ntaps) {
    check_conv_args(w, h, taps, ntaps);
    SRNAV_DISPATCH(conv1d_cols, src, dst, w, h, taps, ntaps);
}

void conv1d_rows_adjoint(const double* src, double* dst, int w, int h,
                         const double* taps, int ntaps) {
    check_conv_args(w, h, taps, ntaps);
    SRNAV_DISPATCH(conv1d_rows_adjoint, src, dst, w, h, taps, ntaps);
}

void conv1d_cols_adjoint(const double* src, double* dst, int w, int h,
                         const double* taps, int ntaps) {
    check_conv_args(w, h, taps, ntaps);
    SRNAV_DISPATCH(conv1d_cols_adjoint, src, dst, w, h, taps, ntaps);
}

void shift_bilinear(const double* src, double* dst, int w, int h,
                    double dx, double dy) {
    SRNAV_DISPATCH(shift_bilinear, src, dst, w, h, dx, dy);
}

#undef SRNAV_DISPATCH

// Scatter-style kernels below are scalar-only reference code; they are a tiny
// fraction of the pipeline cost.

void shift_bilinear_adjoint(const double* src, double* dst, int w, int h,
                            double dx, double dy) {
    using detail::clampi;
    const detail::ShiftAxis ax = detail::shift_axis(dx);
    const detail::ShiftAxis ay = detail::shift_axis(dy);
    const std::size_t total = static_cast<std::size_t>(w) * h;
    std::memset(dst, 0, total * sizeof(double));
    for (int y = 0; y < h; ++y) {
        const int y0 = clampi(y + ay.off, 0, h - 1);
        const int y1 = clampi(y + ay.off + 1, 0, h - 1);
        double* o0 = dst + static_cast<std::size_t>(y0) * w;
        double* o1 = dst + static_cast<std::size_t>(y1) * w;
        const double* in = src + static_cast<std::size_t>(y) * w;
        for (int x = 0; x < w; ++x) {
            const int x0 = clampi(x + ax.off, 0, w - 1);
            const int x1 = clampi(x + ax.off + 1, 0, w - 1);
            const double v = in[x];
            o0[x0] += (ay.w0 * ax.w0) * v;
            o0[x1] += (ay.w0 * ax.w1) * v;
            o1[x0] += (ay.w1 * ax.w0) * v;
            o1[x1] += (ay.w1 * ax.w1) * v;
        }
    }
}

void block_average(const double* src, double* dst, int w, int h, int factor) {
    check_factor_args(w, h, factor);
    const int lw = w / factor;
    const int lh = h / factor;
    const double inv = 1.0 / (static_cast<double>(factor) * factor);
    for (int ly = 0; ly < lh; ++ly) {
        for (int lx = 0; lx < lw; ++lx) {
            double acc = 0.0;
            for (int j = 0; j < factor; ++j) {
                const double* row =
                    src + static_cast<std::size_t>(ly * factor + j) * w + lx * factor;
                for (int i = 0; i < factor; ++i) acc += row[i];
            }
            dst[static_cast<std::size_t>(ly) * lw + lx] = acc * inv;
        }
    }
}

void decimate(const double* src, double* dst, int w, int h, int factor) {
    check_factor_args(w, h, factor);
    const int lw = w / factor;
    const int lh = h / factor;
    for (int ly = 0; ly < lh; ++ly) {
        const double* row = src + static_cast<std::size_t>(ly) * factor * w;
        double* out = dst + static_cast<std::size_t>(ly) * lw;
        for (int lx = 0; lx < lw; ++lx) out[lx] = row[static_cast<std::size_t>(lx) * factor];
    }
}

void decimate_adjoint(const double* src, double* dst, int w, int h, int factor) {
    check_factor_args(w, h, factor);
    const int lw = w / factor;
    const int lh = h / factor;
    std::memset(dst, 0, static_cast<std::size_t>(w) * h * sizeof(double));
    for (int ly = 0; ly < lh; ++ly) {
        const double* in = src + static_cast<std::size_t>(ly) * lw;
        double* row = dst + static_cast<std::size_t>(ly) * factor * w;
        for (int lx = 0; lx < lw; ++lx) row[static_cast<std::size_t>(lx) * factor] = in[lx];
    }
}

}  // namespace srnav::kernels
