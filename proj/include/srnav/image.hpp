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
#include <string>
#include <vector>

namespace srnav {

// Row-major grayscale image, nominal range [0, 1]. Continuous coordinates put
// the center of pixel (ix, iy) at (ix + 0.5, iy + 0.5).
struct Image {
    int width = 0;
    int height = 0;
    std::vector<double> data;

    Image() = default;
    Image(int w, int h) : width(w), height(h), data(static_cast<std::size_t>(w) * h, 0.0) {}

    double& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
    double at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
    std::size_t size() const { return data.size(); }
    double* ptr() { return data.data(); }
    const double* ptr() const { return data.data(); }
    bool same_shape(const Image& o) const { return width == o.width && height == o.height; }
};

// Normalized Gaussian taps truncated at ceil(4*sigma); sigma <= 0 gives the
// identity kernel {1}.
std::vector<double> gaussian_taps(double sigma);

Image blur_gaussian(const Image& src, double sigma);
// Exact transpose of blur_gaussian (replicate-edge boundary absorbed).
Image blur_gaussian_adjoint(const Image& src, double sigma);
// Content moves by (+dx, +dy) pixels; bilinear, replicate edges.
Image shift_image(const Image& src, double dx, double dy);
Image shift_image_adjoint(const Image& src, double dx, double dy);
Image downsample_average(const Image& src, int factor);
Image decimate_image(const Image& src, int factor);
// src is the low-res image; returns the (factor*w, factor*h) scatter.
Image decimate_adjoint_image(const Image& src, int factor);

double image_mean(const Image& img);
// Mean squared difference; throws std::invalid_argument on shape mismatch.
double image_mse(const Image& a, const Image& b);

// 8-bit binary PGM (P5); values are clamped to [0, 1] and scaled to 0..255.
void write_pgm(const Image& img, const std::string& path);
Image read_pgm(const std::string& path);

}  // namespace srnav
