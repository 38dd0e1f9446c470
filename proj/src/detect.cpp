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

#include "srnav/detect.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace srnav {

void DetectOptions::validate() const {
    if (radius_min_px <= 0.0 || radius_max_px < radius_min_px)
        throw std::invalid_argument("detect_circles: bad radius range");
    if (max_count < 1)
        throw std::invalid_argument("detect_circles: max_count must be >= 1");
    if (gradient_threshold_sigmas <= 0.0)
        throw std::invalid_argument("detect_circles: threshold must be > 0");
    if (min_support_frac < 0.0)
        throw std::invalid_argument("detect_circles: min_support_frac must be >= 0");
}

namespace {

struct EdgePixel {
    double x, y;    // continuous position (pixel center)
    double dx, dy;  // unit gradient direction (toward brighter content)
    double mag;     // gradient magnitude
    double dist = 0.0;
};

// Robust noise scale: 1.4826 * median(|horizontal first difference|) / sqrt(2).
double estimate_noise_sigma(const Image& img) {
    std::vector<double> diffs;
    diffs.reserve(img.size());
    for (int y = 0; y < img.height; ++y) {
        const double* row = img.ptr() + static_cast<std::size_t>(y) * img.width;
        for (int x = 0; x + 1 < img.width; ++x)
            diffs.push_back(std::abs(row[x + 1] - row[x]));
    }
    if (diffs.empty()) return 0.0;
    const std::size_t mid = diffs.size() / 2;
    std::nth_element(diffs.begin(), diffs.begin() + static_cast<std::ptrdiff_t>(mid),
                     diffs.end());
    return 1.4826 * diffs[mid] / std::sqrt(2.0);
}

}  // namespace

std::vector<CircleEstimate> detect_circles(const Image& img, const DetectOptions& opts) {
    opts.validate();
    const int w = img.width;
    const int h = img.height;
    if (w < 3 || h < 3) return {};

    // Sobel gradients (central-difference scaling, /8).
    const double sigma = estimate_noise_sigma(img);
    const double threshold = std::max(opts.gradient_threshold_sigmas * sigma, 1e-6);
    std::vector<EdgePixel> edges;
    for (int y = 1; y < h - 1; ++y) {
        for (int x = 1; x < w - 1; ++x) {
            const double gx = ((img.at(x + 1, y - 1) + 2.0 * img.at(x + 1, y) +
                                img.at(x + 1, y + 1)) -
                               (img.at(x - 1, y - 1) + 2.0 * img.at(x - 1, y) +
                                img.at(x - 1, y + 1))) /
                              8.0;
            const double gy = ((img.at(x - 1, y + 1) + 2.0 * img.at(x, y + 1) +
                                img.at(x + 1, y + 1)) -
                               (img.at(x - 1, y - 1) + 2.0 * img.at(x, y - 1) +
                                img.at(x + 1, y - 1))) /
                              8.0;
            const double mag = std::sqrt(gx * gx + gy * gy);
            if (mag > threshold) {
                edges.push_back({x + 0.5, y + 0.5, gx / mag, gy / mag, mag, 0.0});
            }
        }
    }
    if (edges.empty()) return {};

    // Radial Hough voting: each edge pixel casts votes along its gradient
    // direction for every radius in range, splat bilinearly.
    Image acc(w, h);
    for (const EdgePixel& e : edges) {
        for (double s = opts.radius_min_px; s <= opts.radius_max_px + 1e-9; s += 0.5) {
            const double qx = e.x + s * e.dx - 0.5;
            const double qy = e.y + s * e.dy - 0.5;
            const int ix = static_cast<int>(std::floor(qx));
            const int iy = static_cast<int>(std::floor(qy));
            const double fx = qx - ix;
            const double fy = qy - iy;
            const double wts[4] = {(1.0 - fx) * (1.0 - fy), fx * (1.0 - fy),
                                   (1.0 - fx) * fy, fx * fy};
            const int xs[4] = {ix, ix + 1, ix, ix + 1};
            const int ys[4] = {iy, iy, iy + 1, iy + 1};
            for (int i = 0; i < 4; ++i) {
                if (xs[i] >= 0 && xs[i] < w && ys[i] >= 0 && ys[i] < h)
                    acc.at(xs[i], ys[i]) += wts[i];
            }
        }
    }

    const double hist_lo = std::max(0.5, opts.radius_min_px - 2.0);
    const double hist_hi = opts.radius_max_px + 2.0;
    const double bin_w = 0.5;
    const int nbins = static_cast<int>(std::ceil((hist_hi - hist_lo) / bin_w)) + 1;

    std::vector<CircleEstimate> found;
    const int max_attempts = opts.max_count * 4;
    for (int attempt = 0;
         attempt < max_attempts && static_cast<int>(found.size()) < opts.max_count;
         ++attempt) {
        // Row-major argmax: deterministic on exact ties.
        int px = -1, py = -1;
        double peak = 0.0;
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                if (acc.at(x, y) > peak) {
                    peak = acc.at(x, y);
                    px = x;
                    py = y;
                }
            }
        }
        if (peak < 4.0) break;  // fewer than ~4 coincident votes is noise

        // Sub-cell peak: weighted centroid of the 3x3 neighborhood.
        double wsum = 0.0, wx = 0.0, wy = 0.0;
        for (int dy = -1; dy <= 1; ++dy) {
            for (int dx = -1; dx <= 1; ++dx) {
                const int cx = px + dx, cy = py + dy;
                if (cx < 0 || cx >= w || cy < 0 || cy >= h) continue;
                const double v = acc.at(cx, cy);
                wsum += v;
                wx += v * (cx + 0.5);
                wy += v * (cy + 0.5);
            }
        }
        Vec2 coarse{wx / wsum, wy / wsum};

        // Radius from the edge-distance histogram around the coarse center,
        // weighted by gradient magnitude and normalized by circumference.
        // Weighting matters in the noiseless limit, where the MAD threshold
        // collapses and faint blur tails flood the edge set: unweighted
        // counts grow with the annulus circumference and drag the peak
        // outward, while the magnitude profile peaks at the true edge.
        std::vector<double> hist(static_cast<std::size_t>(nbins), 0.0);
        for (EdgePixel& e : edges) {
            const double dx = e.x - coarse.x;
            const double dy = e.y - coarse.y;
            e.dist = std::sqrt(dx * dx + dy * dy);
            if (e.dist < hist_lo || e.dist > hist_hi) continue;
            const int b = static_cast<int>((e.dist - hist_lo) / bin_w);
            if (b >= 0 && b < nbins) hist[static_cast<std::size_t>(b)] += e.mag / e.dist;
        }
        std::vector<double> smooth(hist.size(), 0.0);
        for (int b = 0; b < nbins; ++b) {
            const double l = b > 0 ? hist[static_cast<std::size_t>(b - 1)] : 0.0;
            const double r = b + 1 < nbins ? hist[static_cast<std::size_t>(b + 1)] : 0.0;
            smooth[static_cast<std::size_t>(b)] =
                0.25 * l + 0.5 * hist[static_cast<std::size_t>(b)] + 0.25 * r;
        }
        int best_bin = 0;
        for (int b = 1; b < nbins; ++b) {
            if (smooth[static_cast<std::size_t>(b)] >
                smooth[static_cast<std::size_t>(best_bin)])
                best_bin = b;
        }
        double radius = hist_lo + (best_bin + 0.5) * bin_w;
        if (best_bin > 0 && best_bin + 1 < nbins) {
            const double l = smooth[static_cast<std::size_t>(best_bin - 1)];
            const double m = smooth[static_cast<std::size_t>(best_bin)];
            const double r = smooth[static_cast<std::size_t>(best_bin + 1)];
            const double den = l - 2.0 * m + r;
            if (den < 0.0) radius += 0.5 * (l - r) / den * bin_w;
        }
        // A peak whose edge evidence sits outside the queried radius window
        // (the blur skirt of some larger or smaller structure) is not a
        // detection in range; one bin of slack absorbs interpolation jitter.
        const bool in_range = radius >= opts.radius_min_px - bin_w &&
                              radius <= opts.radius_max_px + bin_w;
        radius = std::clamp(radius, opts.radius_min_px, opts.radius_max_px);

        // Support: edge pixels lying on the candidate ring. A real circle is
        // supported from every direction, while a spurious accumulator peak
        // (vote smear from a structure outside the radius range) only gathers
        // support along a limited arc, so also require 2/3 angular coverage.
        double support = 0.0;
        bool sector[12] = {};
        for (const EdgePixel& e : edges) {
            if (std::abs(e.dist - radius) <= 1.5) {
                support += 1.0;
                const double ang =
                    std::atan2(e.y - coarse.y, e.x - coarse.x) + 3.14159265358979323846;
                int s = static_cast<int>(ang / (2.0 * 3.14159265358979323846 / 12.0));
                sector[std::clamp(s, 0, 11)] = true;
            }
        }
        int covered = 0;
        for (bool s : sector) covered += s ? 1 : 0;

        CircleEstimate cand;
        cand.center_px = coarse;
        cand.radius_px = radius;
        cand.strength = support;
        cand.refined = false;
        if (in_range && covered >= 8 &&
            support >= opts.min_support_frac * 2.0 * 3.14159265358979323846 * radius) {
            found.push_back(refine_center(img, cand));
        }

        // Suppress this peak's neighborhood before looking for the next one.
        const double suppress_r = std::max(2.0, 0.5 * radius);
        const int sx0 = std::max(0, static_cast<int>(std::floor(coarse.x - suppress_r)));
        const int sx1 = std::min(w - 1, static_cast<int>(std::ceil(coarse.x + suppress_r)));
        const int sy0 = std::max(0, static_cast<int>(std::floor(coarse.y - suppress_r)));
        const int sy1 = std::min(h - 1, static_cast<int>(std::ceil(coarse.y + suppress_r)));
        for (int y = sy0; y <= sy1; ++y) {
            for (int x = sx0; x <= sx1; ++x) {
                const double dx = (x + 0.5) - coarse.x;
                const double dy = (y + 0.5) - coarse.y;
                if (dx * dx + dy * dy <= suppress_r * suppress_r) acc.at(x, y) = 0.0;
            }
        }
    }

    const Vec2 img_center{w * 0.5, h * 0.5};
    std::stable_sort(found.begin(), found.end(),
                     [&](const CircleEstimate& a, const CircleEstimate& b) {
                         if (a.strength != b.strength) return a.strength > b.strength;
                         return (a.center_px - img_center).norm() <
                                (b.center_px - img_center).norm();
                     });
    return found;
}

CircleEstimate refine_center(const Image& img, const CircleEstimate& seed) {
    CircleEstimate out = seed;
    out.refined = false;
    const double win = seed.radius_px + 3.0;
    Vec2 c = seed.center_px;
    for (int it = 0; it < 10; ++it) {
        if (c.x - win < 0.0 || c.y - win < 0.0 || c.x + win > img.width ||
            c.y + win > img.height) {
            return out;  // window clipped: keep the coarse estimate, unrefined
        }
        const int x0 = std::max(0, static_cast<int>(std::floor(c.x - win)));
        const int x1 = std::min(img.width - 1, static_cast<int>(std::ceil(c.x + win)));
        const int y0 = std::max(0, static_cast<int>(std::floor(c.y - win)));
        const int y1 = std::min(img.height - 1, static_cast<int>(std::ceil(c.y + win)));
        double wsum = 0.0, wx = 0.0, wy = 0.0;
        const double win2 = win * win;
        for (int y = y0; y <= y1; ++y) {
            const double py = y + 0.5;
            for (int x = x0; x <= x1; ++x) {
                const double px = x + 0.5;
                const double dx = px - c.x;
                const double dy = py - c.y;
                if (dx * dx + dy * dy > win2) continue;
                const double v = std::max(img.at(x, y), 0.0);
                wsum += v;
                wx += v * px;
                wy += v * py;
            }
        }
        if (wsum <= 0.0) return out;
        const Vec2 nc{wx / wsum, wy / wsum};
        const double moved = (nc - c).norm();
        c = nc;
        if (moved < 1e-4) break;
    }
    out.center_px = c;
    out.refined = true;
    return out;
}

}  // namespace srnav
