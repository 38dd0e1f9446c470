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

#include "srnav/sr.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "srnav/kernels.hpp"
#include "srnav/rng.hpp"

namespace srnav {

void SrOptions::validate() const {
    if (upscale_factor < 1)
        throw std::invalid_argument("SrOptions: upscale_factor must be >= 1");
    if (blur_sigma_px < 0.0)
        throw std::invalid_argument("SrOptions: blur_sigma_px must be >= 0");
    if (max_iterations < 1)
        throw std::invalid_argument("SrOptions: max_iterations must be >= 1");
    if (mse_stop_fraction <= 0.0 || mse_stop_fraction >= 1.0)
        throw std::invalid_argument("SrOptions: mse_stop_fraction must be in (0, 1)");
    if (power_iterations < 1)
        throw std::invalid_argument("SrOptions: power_iterations must be >= 1");
}

ShiftSet generate_offsets(int count, std::uint64_t seed, const Mat2& image_jacobian) {
    if (count < 1) throw std::invalid_argument("generate_offsets: count must be >= 1");
    if (std::abs(image_jacobian.det()) <= 1e-6) {
        std::ostringstream msg;
        msg << "generate_offsets: image Jacobian is singular (|det| = "
            << std::abs(image_jacobian.det()) << ", condition number = "
            << image_jacobian.cond() << ")";
        throw std::domain_error(msg.str());
    }
    const Mat2 inv = image_jacobian.inverse();

    ShiftSet set;
    set.offsets_px.resize(static_cast<std::size_t>(count));
    set.offsets_px[0] = {0.0, 0.0};
    Rng rng(seed);
    for (int k = 1; k < count; ++k) {
        set.offsets_px[static_cast<std::size_t>(k)] = {rng.uniform(-1.0, 1.0),
                                                       rng.uniform(-1.0, 1.0)};
    }
    Vec2 issued{0.0, 0.0};
    for (int k = 1; k < count; ++k) {
        const Vec2 delta = set.offsets_px[static_cast<std::size_t>(k)] -
                           set.offsets_px[static_cast<std::size_t>(k - 1)];
        const Vec2 cmd = inv * delta;
        set.commands_mm.push_back(cmd);
        issued += cmd;
    }
    set.return_command_mm = -issued;
    return set;
}

namespace {

// Cubic convolution weight, a = -0.5.
inline double cubic_w(double t) {
    const double a = -0.5;
    const double at = std::abs(t);
    if (at <= 1.0) return ((a + 2.0) * at - (a + 3.0)) * at * at + 1.0;
    if (at < 2.0) return ((a * at - 5.0 * a) * at + 8.0 * a) * at - 4.0 * a;
    return 0.0;
}

struct CubicPhase {
    int base;  // index offset of the second tap's left neighbor
    double w[4];
};

// Per-phase taps for an integer upscale. aligned=false is the standard
// center-aligned mapping u = (x + 0.5) / f - 0.5; aligned=true is u = x / f,
// which matches the decimation-aligned SR grid (phase 0 copies the sample).
std::vector<CubicPhase> cubic_phases(int factor, bool aligned) {
    std::vector<CubicPhase> phases(static_cast<std::size_t>(factor));
    for (int p = 0; p < factor; ++p) {
        const double u = aligned ? static_cast<double>(p) / factor
                                 : (p + 0.5) / factor - 0.5;
        const double fl = std::floor(u);
        const double frac = u - fl;
        CubicPhase ph;
        ph.base = static_cast<int>(fl) - 1;
        for (int k = 0; k < 4; ++k) ph.w[k] = cubic_w(frac - (k - 1));
        phases[static_cast<std::size_t>(p)] = ph;
    }
    return phases;
}

inline int clampi(int v, int lo, int hi) { return std::min(std::max(v, lo), hi); }

Image upsample_cubic(const Image& src, int factor, bool aligned) {
    if (factor < 1) throw std::invalid_argument("upsample: factor must be >= 1");
    if (src.width < 1 || src.height < 1)
        throw std::invalid_argument("upsample: empty image");
    if (factor == 1) return src;

    const auto phases = cubic_phases(factor, aligned);
    const int ow = src.width * factor;
    const int oh = src.height * factor;

    Image horiz(ow, src.height);
    for (int y = 0; y < src.height; ++y) {
        const double* in = src.ptr() + static_cast<std::size_t>(y) * src.width;
        double* out = horiz.ptr() + static_cast<std::size_t>(y) * ow;
        for (int x = 0; x < ow; ++x) {
            const CubicPhase& ph = phases[static_cast<std::size_t>(x % factor)];
            const int q = x / factor + ph.base;
            double acc = 0.0;
            for (int k = 0; k < 4; ++k)
                acc += ph.w[k] * in[clampi(q + k, 0, src.width - 1)];
            out[x] = acc;
        }
    }

    Image out(ow, oh);
    for (int y = 0; y < oh; ++y) {
        const CubicPhase& ph = phases[static_cast<std::size_t>(y % factor)];
        const int q = y / factor + ph.base;
        const double* rows[4];
        for (int k = 0; k < 4; ++k)
            rows[k] = horiz.ptr() +
                      static_cast<std::size_t>(clampi(q + k, 0, src.height - 1)) * ow;
        double* dst = out.ptr() + static_cast<std::size_t>(y) * ow;
        for (int x = 0; x < ow; ++x) {
            dst[x] = ph.w[0] * rows[0][x] + ph.w[1] * rows[1][x] +
                     ph.w[2] * rows[2][x] + ph.w[3] * rows[3][x];
        }
    }
    return out;
}

void check_offset(const Vec2& offset_px) {
    if (std::abs(offset_px.x) > 2.0 || std::abs(offset_px.y) > 2.0)
        throw std::invalid_argument("forward_project: |offset| must be <= 2 pixels");
}

// Workspace for repeated applications of the forward/adjoint operators.
struct SrOperator {
    int u;
    int lw, lh;  // low-res dims
    int W, H;    // SR dims
    std::vector<double> taps;
    std::vector<Vec2> shifts_sr;  // offsets scaled to SR pixels
    mutable Image t1, t2;         // SR-sized scratch

    SrOperator(int w, int h, int upscale, double blur_sigma_base,
               const std::vector<Vec2>& offsets)
        : u(upscale), lw(w), lh(h), W(w * upscale), H(h * upscale),
          taps(gaussian_taps(blur_sigma_base * upscale)), t1(W, H), t2(W, H) {
        shifts_sr.reserve(offsets.size());
        for (const Vec2& o : offsets) shifts_sr.push_back(o * static_cast<double>(u));
    }

    bool has_blur() const { return taps.size() > 1; }

    // low = D B T_k X
    void forward(const Image& x, std::size_t k, Image& low) const {
        const Image* stage = &x;
        const Vec2& s = shifts_sr[k];
        if (s.x != 0.0 || s.y != 0.0) {
            kernels::shift_bilinear(stage->ptr(), t1.ptr(), W, H, s.x, s.y);
            stage = &t1;
        }
        if (has_blur()) {
            kernels::conv1d_rows(stage->ptr(), t2.ptr(), W, H, taps.data(),
                                 static_cast<int>(taps.size()));
            kernels::conv1d_cols(t2.ptr(), t1.ptr(), W, H, taps.data(),
                                 static_cast<int>(taps.size()));
            stage = &t1;
        }
        if (u > 1) {
            kernels::decimate(stage->ptr(), low.ptr(), W, H, u);
        } else {
            low.data = stage->data;
        }
    }

    // acc += T_k^T B^T D^T r
    void add_adjoint(const Image& r, std::size_t k, Image& acc) const {
        if (u > 1) {
            kernels::decimate_adjoint(r.ptr(), t1.ptr(), W, H, u);
        } else {
            t1.data = r.data;
        }
        const Image* stage = &t1;
        if (has_blur()) {
            kernels::conv1d_cols_adjoint(stage->ptr(), t2.ptr(), W, H, taps.data(),
                                         static_cast<int>(taps.size()));
            kernels::conv1d_rows_adjoint(t2.ptr(), t1.ptr(), W, H, taps.data(),
                                         static_cast<int>(taps.size()));
            stage = &t1;
        }
        const Vec2& s = shifts_sr[k];
        if (s.x != 0.0 || s.y != 0.0) {
            kernels::shift_bilinear_adjoint(stage->ptr(), t2.ptr(), W, H, s.x, s.y);
            stage = &t2;
        }
        kernels::axpy(1.0, stage->ptr(), acc.ptr(), acc.size());
    }
};

}  // namespace

Image upsample_bicubic(const Image& src, int factor) {
    return upsample_cubic(src, factor, /*aligned=*/false);
}

Image forward_project(const Image& sr_image, const Vec2& offset_px,
                      const SrOptions& opts) {
    opts.validate();
    check_offset(offset_px);
    if (sr_image.width < 2 || sr_image.height < 2)
        throw std::invalid_argument("forward_project: image must be at least 2x2");
    if (sr_image.width % opts.upscale_factor != 0 ||
        sr_image.height % opts.upscale_factor != 0)
        throw std::invalid_argument(
            "forward_project: dimensions not divisible by upscale_factor");
    const int lw = sr_image.width / opts.upscale_factor;
    const int lh = sr_image.height / opts.upscale_factor;
    SrOperator op(lw, lh, opts.upscale_factor, opts.blur_sigma_px, {offset_px});
    Image low(lw, lh);
    op.forward(sr_image, 0, low);
    return low;
}

SrResult reconstruct_sr(const std::vector<Image>& frames, const ShiftSet& shifts,
                        const SrOptions& opts) {
    opts.validate();
    if (frames.empty())
        throw std::invalid_argument("reconstruct_sr: at least one frame required");
    if (shifts.offsets_px.size() != frames.size())
        throw std::invalid_argument("reconstruct_sr: offsets/frames size mismatch");
    const int lw = frames[0].width;
    const int lh = frames[0].height;
    if (lw < 2 || lh < 2)
        throw std::invalid_argument("reconstruct_sr: frames must be at least 2x2");
    for (const Image& f : frames) {
        if (f.width != lw || f.height != lh)
            throw std::invalid_argument("reconstruct_sr: frames differ in shape");
    }
    for (const Vec2& o : shifts.offsets_px) check_offset(o);

    const std::size_t n = frames.size();
    SrOperator op(lw, lh, opts.upscale_factor, opts.blur_sigma_px, shifts.offsets_px);
    const std::size_t sr_size = static_cast<std::size_t>(op.W) * op.H;
    const double denom = static_cast<double>(n) * lw * lh;

    SrResult res;
    res.image = upsample_cubic(frames[0], opts.upscale_factor, /*aligned=*/true);

    // Power iteration on G = sum_k A_k^T A_k, fixed internal seed so the
    // reconstruction is a pure function of (frames, shifts, opts).
    {
        Image v(op.W, op.H);
        Rng rng(0x5eedULL);
        for (double& x : v.data) x = rng.uniform(-0.5, 0.5);
        double nrm = std::sqrt(kernels::dot(v.ptr(), v.ptr(), sr_size));
        if (nrm == 0.0) nrm = 1.0;
        kernels::scale(v.ptr(), 1.0 / nrm, sr_size);
        Image low(lw, lh), gv(op.W, op.H);
        double lambda = 0.0;
        for (int it = 0; it < opts.power_iterations; ++it) {
            std::fill(gv.data.begin(), gv.data.end(), 0.0);
            for (std::size_t k = 0; k < n; ++k) {
                op.forward(v, k, low);
                op.add_adjoint(low, k, gv);
            }
            lambda = std::sqrt(kernels::dot(gv.ptr(), gv.ptr(), sr_size));
            if (lambda <= 0.0) break;
            kernels::scale(gv.ptr(), 1.0 / lambda, sr_size);
            std::swap(v.data, gv.data);
        }
        res.operator_norm = lambda;
        res.step_size = lambda > 1e-12 ? 1.0 / lambda : 1.0;
    }

    Image low(lw, lh), grad(op.W, op.H);
    double initial_mse = 0.0;
    for (int iter = 0; iter <= opts.max_iterations; ++iter) {
        std::fill(grad.data.begin(), grad.data.end(), 0.0);
        double sq = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            op.forward(res.image, k, low);
            kernels::axpy(-1.0, frames[k].ptr(), low.ptr(), low.size());
            sq += kernels::dot(low.ptr(), low.ptr(), low.size());
            op.add_adjoint(low, k, grad);
        }
        const double mse = sq / denom;
        res.residual_history.push_back(mse);
        if (iter == 0) initial_mse = mse;
        if (mse <= opts.mse_stop_fraction * initial_mse) {
            res.converged = true;
            break;
        }
        if (iter == opts.max_iterations) break;
        kernels::axpy(-res.step_size, grad.ptr(), res.image.ptr(), sr_size);
        ++res.iterations_used;
    }
    return res;
}

Vec2 sr_to_base_coords(const Vec2& sr_coords, int upscale_factor) {
    const double u = static_cast<double>(upscale_factor);
    return {(sr_coords.x - 0.5) / u + 0.5, (sr_coords.y - 0.5) / u + 0.5};
}

Vec2 bicubic_to_base_coords(const Vec2& bicubic_coords, int factor) {
    const double f = static_cast<double>(factor);
    return {bicubic_coords.x / f, bicubic_coords.y / f};
}

}  // namespace srnav
