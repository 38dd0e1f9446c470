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

#include "srnav/image.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <stdexcept>

#include "srnav/kernels.hpp"

namespace srnav {

std::vector<double> gaussian_taps(double sigma) {
    if (sigma <= 0.0) return {1.0};
    const int radius = static_cast<int>(std::ceil(4.0 * sigma));
    std::vector<double> taps(2 * radius + 1);
    double total = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        const double v = std::exp(-0.5 * (i / sigma) * (i / sigma));
        taps[i + radius] = v;
        total += v;
    }
    for (double& t : taps) t /= total;
    return taps;
}

Image blur_gaussian(const Image& src, double sigma) {
    if (sigma <= 0.0) return src;
    const auto taps = gaussian_taps(sigma);
    Image tmp(src.width, src.height);
    Image out(src.width, src.height);
    kernels::conv1d_rows(src.ptr(), tmp.ptr(), src.width, src.height, taps.data(),
                         static_cast<int>(taps.size()));
    kernels::conv1d_cols(tmp.ptr(), out.ptr(), src.width, src.height, taps.data(),
                         static_cast<int>(taps.size()));
    return out;
}

Image blur_gaussian_adjoint(const Image& src, double sigma) {
    if (sigma <= 0.0) return src;
    const auto taps = gaussian_taps(sigma);
    Image tmp(src.width, src.height);
    Image out(src.width, src.height);
    // Forward is cols(rows(x)), so the transpose is rows_adj(cols_adj(y)).
    kernels::conv1d_cols_adjoint(src.ptr(), tmp.ptr(), src.width, src.height, taps.data(),
                                 static_cast<int>(taps.size()));
    kernels::conv1d_rows_adjoint(tmp.ptr(), out.ptr(), src.width, src.height, taps.data(),
                                 static_cast<int>(taps.size()));
    return out;
}

Image shift_image(const Image& src, double dx, double dy) {
    Image out(src.width, src.height);
    kernels::shift_bilinear(src.ptr(), out.ptr(), src.width, src.height, dx, dy);
    return out;
}

Image shift_image_adjoint(const Image& src, double dx, double dy) {
    Image out(src.width, src.height);
    kernels::shift_bilinear_adjoint(src.ptr(), out.ptr(), src.width, src.height, dx, dy);
    return out;
}

Image downsample_average(const Image& src, int factor) {
    Image out(src.width / factor, src.height / factor);
    kernels::block_average(src.ptr(), out.ptr(), src.width, src.height, factor);
    return out;
}

Image decimate_image(const Image& src, int factor) {
    Image out(src.width / factor, src.height / factor);
    kernels::decimate(src.ptr(), out.ptr(), src.width, src.height, factor);
    return out;
}

Image decimate_adjoint_image(const Image& src, int factor) {
    Image out(src.width * factor, src.height * factor);
    kernels::decimate_adjoint(src.ptr(), out.ptr(), out.width, out.height, factor);
    return out;
}

double image_mean(const Image& img) {
    if (img.size() == 0) throw std::invalid_argument("image_mean: empty image");
    return kernels::sum(img.ptr(), img.size()) / static_cast<double>(img.size());
}

double image_mse(const Image& a, const Image& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("image_mse: shape mismatch");
    if (a.size() == 0) throw std::invalid_argument("image_mse: empty image");
    return kernels::sum_sq_diff(a.ptr(), b.ptr(), a.size()) / static_cast<double>(a.size());
}

void write_pgm(const Image& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_pgm: cannot open " + path);
    out << "P5\n" << img.width << " " << img.height << "\n255\n";
    std::vector<std::uint8_t> row(static_cast<std::size_t>(img.width));
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            double v = img.at(x, y);
            v = v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
            row[static_cast<std::size_t>(x)] =
                static_cast<std::uint8_t>(std::lround(v * 255.0));
        }
        out.write(reinterpret_cast<const char*>(row.data()),
                  static_cast<std::streamsize>(row.size()));
    }
    if (!out) throw std::runtime_error("write_pgm: write failed for " + path);
}

namespace {

int next_pnm_int(std::istream& in) {
    // Skips whitespace and '#' comments per the PNM grammar.
    int ch = in.get();
    while (ch != EOF) {
        if (ch == '#') {
            while (ch != EOF && ch != '\n') ch = in.get();
        } else if (!std::isspace(ch)) {
            break;
        }
        ch = in.get();
    }
    if (ch == EOF) throw std::runtime_error("read_pgm: truncated header");
    int value = 0;
    bool any = false;
    while (ch != EOF && std::isdigit(ch)) {
        value = value * 10 + (ch - '0');
        any = true;
        ch = in.get();
    }
    if (!any) throw std::runtime_error("read_pgm: malformed header");
    return value;
}

}  // namespace

Image read_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_pgm: cannot open " + path);
    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (magic[0] != 'P' || magic[1] != '5')
        throw std::runtime_error("read_pgm: not a binary PGM: " + path);
    const int w = next_pnm_int(in);
    const int h = next_pnm_int(in);
    const int maxval = next_pnm_int(in);
    if (w <= 0 || h <= 0 || maxval <= 0 || maxval > 255)
        throw std::runtime_error("read_pgm: unsupported header in " + path);
    Image img(w, h);
    std::vector<std::uint8_t> row(static_cast<std::size_t>(w));
    for (int y = 0; y < h; ++y) {
        in.read(reinterpret_cast<char*>(row.data()), static_cast<std::streamsize>(row.size()));
        if (!in) throw std::runtime_error("read_pgm: truncated data in " + path);
        for (int x = 0; x < w; ++x)
            img.at(x, y) = static_cast<double>(row[static_cast<std::size_t>(x)]) / maxval;
    }
    return img;
}

}  // namespace srnav
