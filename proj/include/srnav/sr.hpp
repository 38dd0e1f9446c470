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

#include <cstdint>
#include <vector>

#include "srnav/geometry.hpp"
#include "srnav/image.hpp"

namespace srnav {

// Multi-frame super-resolution from known sub-pixel offsets, solved as
// gradient descent on  argmin_X  sum_k || D B T_k X - I_k ||^2  where T_k is
// a bilinear sub-pixel shift, B a Gaussian PSF and D plain decimation by the
// upscale factor. The step size is 1 / lambda_hat with lambda_hat a
// power-iteration estimate of ||sum_k (D B T_k)^T (D B T_k)||, which keeps
// every step monotone in the residual.
struct SrOptions {
    int upscale_factor = 2;           // >= 1 (1 degenerates to the identity problem)
    double blur_sigma_px = 0.0;       // forward-model PSF std in base pixels
    int max_iterations = 100;
    double mse_stop_fraction = 1e-4;  // stop when MSE <= fraction * initial MSE
    int power_iterations = 20;

    void validate() const;
};

// Planned acquisition offsets and the robot commands that realize them.
// offsets_px are image-space offsets relative to frame 0 (which is always at
// the origin); commands_mm[k] moves the robot from pose k to pose k+1, and
// return_command_mm is the negated sum of all commands.
struct ShiftSet {
    std::vector<Vec2> offsets_px;
    std::vector<Vec2> commands_mm;
    Vec2 return_command_mm;
};

// First offset is the current position (0, 0); the rest are uniform in
// [-1, 1) pixels. Commands are derived through the inverse image Jacobian;
// throws std::domain_error naming the condition number if it is singular.
ShiftSet generate_offsets(int count, std::uint64_t seed, const Mat2& image_jacobian);

// Applies the degradation model of one frame to a candidate high-res image:
// shift by offset (in base pixels), blur, decimate. Throws on |offset| > 2.
Image forward_project(const Image& sr_image, const Vec2& offset_px,
                      const SrOptions& opts);

// Standard bicubic upscale (a = -0.5), replicate edges, center-aligned
// sampling ((x + 0.5) / factor - 0.5). factor 1 returns the input unchanged.
Image upsample_bicubic(const Image& src, int factor);

struct SrResult {
    Image image;
    // Residual MSE at each iterate: element 0 is the initial guess, the last
    // element is the final iterate; length is iterations_used + 1.
    std::vector<double> residual_history;
    int iterations_used = 0;
    bool converged = false;  // true when the MSE stop criterion fired
    double step_size = 0.0;
    double operator_norm = 0.0;
};

SrResult reconstruct_sr(const std::vector<Image>& frames, const ShiftSet& shifts,
                        const SrOptions& opts);

// Coordinate conversions between observation grids and the base grid.
// Decimation ties SR pixel u*i to base pixel i, so a continuous SR coordinate
// c maps to (c - 0.5) / u + 0.5; the center-aligned bicubic grid maps to c / f.
Vec2 sr_to_base_coords(const Vec2& sr_coords, int upscale_factor);
Vec2 bicubic_to_base_coords(const Vec2& bicubic_coords, int factor);

}  // namespace srnav
