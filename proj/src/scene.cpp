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

#include "srnav/scene.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "srnav/kernels.hpp"
#include "srnav/rng.hpp"

namespace srnav {

void DegradationParams::validate() const {
    if (blur_sigma_px < 0.0)
        throw std::invalid_argument("degrade: blur_sigma_px must be >= 0");
    if (noise_sigma < 0.0)
        throw std::invalid_argument("degrade: noise_sigma must be >= 0");
    if (downsample < 1)
        throw std::invalid_argument("degrade: downsample must be >= 1");
    if (std::abs(shift_px.x) > 2.0 || std::abs(shift_px.y) > 2.0)
        throw std::invalid_argument("degrade: |shift| must be <= 2 base pixels");
}

HighResImage render_disk(const GroundTruthCircle& circle, int base_width,
                         int base_height, int supersample) {
    if (base_width < 1 || base_height < 1)
        throw std::invalid_argument("render_disk: canvas must be at least 1x1");
    if (supersample < 1)
        throw std::invalid_argument("render_disk: supersample must be >= 1");
    if (circle.radius_px < 0.0)
        throw std::invalid_argument("render_disk: radius must be >= 0");
    if (circle.radius_px > 0.0) {
        const bool inside = circle.center_px.x - circle.radius_px >= 0.0 &&
                            circle.center_px.y - circle.radius_px >= 0.0 &&
                            circle.center_px.x + circle.radius_px <= base_width &&
                            circle.center_px.y + circle.radius_px <= base_height;
        if (!inside)
            throw std::invalid_argument("render_disk: disk extends beyond the canvas");
    }

    HighResImage hi;
    hi.supersample = supersample;
    hi.image = Image(base_width * supersample, base_height * supersample);
    std::fill(hi.image.data.begin(), hi.image.data.end(), circle.background);
    if (circle.radius_px <= 0.0) return hi;

    const double s = static_cast<double>(supersample);
    const double r2 = circle.radius_px * circle.radius_px;
    // Sampling only the bounding box keeps large canvases cheap.
    const int x_lo = std::max(0, static_cast<int>(std::floor((circle.center_px.x - circle.radius_px) * s)) - 1);
    const int x_hi = std::min(hi.image.width - 1,
                              static_cast<int>(std::ceil((circle.center_px.x + circle.radius_px) * s)) + 1);
    const int y_lo = std::max(0, static_cast<int>(std::floor((circle.center_px.y - circle.radius_px) * s)) - 1);
    const int y_hi = std::min(hi.image.height - 1,
                              static_cast<int>(std::ceil((circle.center_px.y + circle.radius_px) * s)) + 1);
    for (int y = y_lo; y <= y_hi; ++y) {
        const double cy = (y + 0.5) / s - circle.center_px.y;
        for (int x = x_lo; x <= x_hi; ++x) {
            const double cx = (x + 0.5) / s - circle.center_px.x;
            if (cx * cx + cy * cy <= r2) hi.image.at(x, y) = circle.foreground;
        }
    }
    return hi;
}

Image degrade(const HighResImage& hi, const DegradationParams& params) {
    params.validate();
    if (hi.supersample < 1)
        throw std::invalid_argument("degrade: supersample must be >= 1");
    const int total = hi.supersample * params.downsample;
    if (hi.image.width % total != 0 || hi.image.height % total != 0)
        throw std::invalid_argument("degrade: dimensions not divisible by total factor");

    const Image* stage = &hi.image;
    Image shifted;
    if (params.shift_px.x != 0.0 || params.shift_px.y != 0.0) {
        shifted = shift_image(hi.image, params.shift_px.x * hi.supersample,
                              params.shift_px.y * hi.supersample);
        stage = &shifted;
    }
    Image blurred;
    if (params.blur_sigma_px > 0.0) {
        blurred = blur_gaussian(*stage, params.blur_sigma_px * hi.supersample);
        stage = &blurred;
    }
    Image low = total > 1 ? downsample_average(*stage, total) : *stage;
    if (params.noise_sigma > 0.0) {
        Rng rng(params.rng_seed);
        for (double& v : low.data) v += params.noise_sigma * rng.normal();
        kernels::clamp01(low.ptr(), low.size());
    }
    return low;
}

}  // namespace srnav
