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

#include "srnav/geometry.hpp"
#include "srnav/image.hpp"

namespace srnav {

// Scene description in base-resolution pixel coordinates (continuous; pixel
// (ix, iy) center is at ix + 0.5, iy + 0.5).
struct GroundTruthCircle {
    Vec2 center_px;
    double radius_px = 0.0;
    double foreground = 1.0;
    double background = 0.0;
};

// Supersampled rendering of a scene; image dimensions are
// (base_width * supersample, base_height * supersample).
struct HighResImage {
    Image image;
    int supersample = 1;
};

struct DegradationParams {
    double blur_sigma_px = 0.5;  // Gaussian PSF std in base pixels
    double noise_sigma = 0.02;   // additive Gaussian noise, fraction of full scale
    int downsample = 1;          // extra integer camera factor on top of supersample
    Vec2 shift_px;               // sub-pixel scene shift in base pixels, |comp| <= 2
    std::uint64_t rng_seed = 0;

    void validate() const;
};

// Binary disk sampled at high-res pixel centers. Throws std::invalid_argument
// if the disk extends beyond the canvas or the geometry is malformed; a zero
// radius yields a pure-background image.
HighResImage render_disk(const GroundTruthCircle& circle, int base_width,
                         int base_height, int supersample);

// Camera model: sub-pixel warp at the high-res grid, Gaussian blur (sigma
// scaled to the high-res grid), exact area-average downsample to
// base/downsample resolution, then optional seeded Gaussian noise with a
// final clamp to [0, 1]. Noise-free output is not clamped, which keeps the
// operator linear for adjoint/consistency checks.
Image degrade(const HighResImage& hi, const DegradationParams& params);

}  // namespace srnav
