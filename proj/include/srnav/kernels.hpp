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

#include <cstddef>

// Low-level array kernels behind the image pipeline. Every kernel has a
// scalar reference implementation; the hot gather-style kernels also have an
// AVX2 variant selected at runtime. Both variants perform the same
// floating-point operations in the same order, so results are bit-identical
// across ISAs (the library is compiled with -ffp-contract=off and the AVX2
// code uses no FMA).
namespace srnav::kernels {

enum class Isa { scalar, avx2 };

const char* isa_name(Isa isa);
bool isa_supported(Isa isa);
// Active ISA: highest supported level by default; the SRNAV_ISA environment
// variable ("scalar" or "avx2") overrides the default at first use.
Isa active_isa();
// Throws std::runtime_error if the requested ISA is not supported.
void set_active_isa(Isa isa);

// Reductions. Accumulation is 4-lane blocked with the lanes combined as
// (s0 + s2) + (s1 + s3), then a sequential tail.
double dot(const double* a, const double* b, std::size_t n);
double sum(const double* a, std::size_t n);
double sum_sq_diff(const double* a, const double* b, std::size_t n);

// Elementwise.
void axpy(double alpha, const double* x, double* y, std::size_t n);  // y += alpha*x
void scale(double* x, double alpha, std::size_t n);
void clamp01(double* x, std::size_t n);

// Separable 1-D convolution with replicate-edge padding. ntaps is odd and the
// kernel is centered; requires w >= 2 and h >= 2. The _adjoint variants apply
// the exact transpose of the padded operator (boundary rows/columns absorb
// the clamped contributions).
void conv1d_rows(const double* src, double* dst, int w, int h,
                 const double* taps, int ntaps);
void conv1d_cols(const double* src, double* dst, int w, int h,
                 const double* taps, int ntaps);
void conv1d_rows_adjoint(const double* src, double* dst, int w, int h,
                         const double* taps, int ntaps);
void conv1d_cols_adjoint(const double* src, double* dst, int w, int h,
                         const double* taps, int ntaps);

// Uniform bilinear translation with replicate-edge padding:
// dst(x, y) = src(x - dx, y - dy), i.e. content moves by (+dx, +dy).
void shift_bilinear(const double* src, double* dst, int w, int h,
                    double dx, double dy);
// Exact transpose of shift_bilinear (scatter form, scalar only).
void shift_bilinear_adjoint(const double* src, double* dst, int w, int h,
                            double dx, double dy);

// Resolution changes; w and h always describe the high-resolution grid and
// must be divisible by factor.
void block_average(const double* src, double* dst, int w, int h, int factor);
void decimate(const double* src, double* dst, int w, int h, int factor);
// Transpose of decimate: scatter the low-res image onto the (factor*...)
// coset of a zeroed high-res grid.
void decimate_adjoint(const double* src, double* dst, int w, int h, int factor);

}  // namespace srnav::kernels
