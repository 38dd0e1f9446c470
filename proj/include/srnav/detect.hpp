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

#include <vector>

#include "srnav/geometry.hpp"
#include "srnav/image.hpp"

namespace srnav {

struct CircleEstimate {
    Vec2 center_px;     // continuous coords, pixel centers at +0.5
    double radius_px = 0.0;
    double strength = 0.0;  // edge pixels supporting the circle
    bool refined = false;
};

struct DetectOptions {
    double radius_min_px = 3.0;
    double radius_max_px = 12.0;
    int max_count = 1;
    // Edge threshold is this many noise sigmas (sigma estimated from the
    // median absolute horizontal first difference).
    double gradient_threshold_sigmas = 4.0;
    // A candidate needs at least this fraction of the ideal 2*pi*r edge count.
    double min_support_frac = 0.3;

    void validate() const;
};

// Bright-on-dark circle detection: Sobel gradients, radial Hough voting along
// the gradient direction with bilinear splatting, histogram radius estimate,
// then sub-pixel refinement via refine_center. Candidates are ordered by
// strength (desc), then distance to the image center (asc). Returns an empty
// list when nothing passes the thresholds (e.g. a blank image).
std::vector<CircleEstimate> detect_circles(const Image& img, const DetectOptions& opts);

// Iterated intensity-weighted centroid over a circular window of radius
// (radius_px + 3). If the window would cross the image border the input is
// returned unchanged with refined = false.
CircleEstimate refine_center(const Image& img, const CircleEstimate& seed);

}  // namespace srnav
