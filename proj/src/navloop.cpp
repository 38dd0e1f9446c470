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

#include "srnav/navloop.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "srnav/scene.hpp"

namespace srnav {

const char* mode_name(Mode mode) {
    switch (mode) {
        case Mode::base: return "base";
        case Mode::bicubic: return "bicubic";
        case Mode::sr: return "sr";
    }
    return "unknown";
}

std::optional<Mode> parse_mode(std::string_view name) {
    if (name == "base") return Mode::base;
    if (name == "bi" || name == "bicubic") return Mode::bicubic;
    if (name == "sr") return Mode::sr;
    return std::nullopt;
}

Vec2 CameraModel::project(const Vec2& world_mm) const {
    return pixel_jacobian() * world_mm + offset_px;
}

Mat2 CameraModel::pixel_jacobian() const {
    return Mat2::rotation(rotation_rad) * px_per_mm;
}

SimulatedRig::SimulatedRig(const RigParams& params, std::uint64_t seed)
    : params_(params), rng_(Rng::derive(seed, 0x7214)) {
    if (params_.fov_px < 1)
        throw std::invalid_argument("SimulatedRig: fov_px must be >= 1");
    if (params_.supersample < 1)
        throw std::invalid_argument("SimulatedRig: supersample must be >= 1");
    if (params_.top_plane_z_mm == params_.bottom_plane_z_mm)
        throw std::invalid_argument("SimulatedRig: stage planes must be distinct");
}

Vec2 SimulatedRig::true_tip_mm() const {
    RobotState state;
    state.top_offset_mm = true_offset_;
    state.bottom_offset_mm = {0.0, 0.0};
    state.top_frame = RigidTransform::translation({0.0, 0.0, params_.top_plane_z_mm});
    state.bottom_frame =
        RigidTransform::translation({0.0, 0.0, params_.bottom_plane_z_mm});
    state.travel_limit_mm = params_.travel_limit_mm;
    const auto [top, bottom] = forward_ball_positions(state);
    const Vec3 tip =
        intersect_line_plane(needle_line(top, bottom), params_.treatment_plane_z_mm);
    return {tip.x, tip.y};
}

Vec2 SimulatedRig::tip_px() const { return params_.camera.project(true_tip_mm()); }

Mat2 SimulatedRig::analytic_base_jacobian() const {
    // tip = bottom + (bottom - top) * lever on the treatment plane, with the
    // bottom stage fixed, so d(tip)/d(top) = -lever * I.
    const double lever = (params_.treatment_plane_z_mm - params_.bottom_plane_z_mm) /
                         (params_.bottom_plane_z_mm - params_.top_plane_z_mm);
    return params_.camera.pixel_jacobian() * (-lever);
}

void SimulatedRig::move_by(const Vec2& delta_mm) {
    commanded_ += delta_mm;
    Vec2 realized = delta_mm;
    if (params_.actuator_noise_mm > 0.0) {
        realized.x += params_.actuator_noise_mm * rng_.normal();
        realized.y += params_.actuator_noise_mm * rng_.normal();
    }
    true_offset_ += realized;
}

void SimulatedRig::move_to(const Vec2& commanded_target_mm) {
    Vec2 realized = commanded_target_mm - commanded_;
    commanded_ = commanded_target_mm;  // exact bookkeeping, no drift
    if (params_.actuator_noise_mm > 0.0) {
        realized.x += params_.actuator_noise_mm * rng_.normal();
        realized.y += params_.actuator_noise_mm * rng_.normal();
    }
    true_offset_ += realized;
}

Image SimulatedRig::acquire_frame() {
    const Vec2 center = tip_px();
    const double radius = params_.marker_radius_mm * params_.camera.px_per_mm;
    const double fov = static_cast<double>(params_.fov_px);
    if (center.x - radius < 0.0 || center.y - radius < 0.0 ||
        center.x + radius > fov || center.y + radius > fov) {
        std::ostringstream msg;
        msg << "acquire_frame: marker at (" << center.x << ", " << center.y
            << ") px with radius " << radius << " px is outside the " << params_.fov_px
            << "x" << params_.fov_px << " field of view";
        throw std::runtime_error(msg.str());
    }
    GroundTruthCircle circle;
    circle.center_px = center;
    circle.radius_px = radius;
    const HighResImage hi =
        render_disk(circle, params_.fov_px, params_.fov_px, params_.supersample);
    DegradationParams degr;
    degr.blur_sigma_px = params_.blur_sigma_px;
    degr.noise_sigma = params_.noise_sigma;
    degr.downsample = 1;
    degr.shift_px = {0.0, 0.0};
    degr.rng_seed = rng_.next_u64();
    ++frames_;
    return degrade(hi, degr);
}

Vec2 SimulatedRig::record_puncture() {
    Vec2 tip = true_tip_mm();
    if (params_.puncture_noise_mm > 0.0) {
        tip.x += params_.puncture_noise_mm * rng_.normal();
        tip.y += params_.puncture_noise_mm * rng_.normal();
    }
    return tip;
}

namespace {

Vec2 base_to_observation_coords(const Vec2& base, Mode mode, int factor) {
    const double f = static_cast<double>(factor);
    switch (mode) {
        case Mode::base: return base;
        case Mode::bicubic: return base * f;
        case Mode::sr: return {(base.x - 0.5) * f + 0.5, (base.y - 0.5) * f + 0.5};
    }
    return base;
}

DetectOptions scaled_detect_options(const DetectOptions& base_opts, double scale) {
    DetectOptions opts = base_opts;
    opts.radius_min_px *= scale;
    opts.radius_max_px *= scale;
    return opts;
}

}  // namespace

Observation acquire_observation(SimulatedRig& rig, Mode mode, const NavLoopConfig& cfg,
                                const Mat2& base_jacobian, std::uint64_t obs_seed) {
    Observation obs;
    const int factor = cfg.sr.upscale_factor;
    const Vec2 analytic_tip_base = rig.tip_px();  // pose before any SR moves

    switch (mode) {
        case Mode::base: {
            obs.raw_frames.push_back(rig.acquire_frame());
            obs.image = obs.raw_frames[0];
            obs.scale = 1.0;
            break;
        }
        case Mode::bicubic: {
            obs.raw_frames.push_back(rig.acquire_frame());
            obs.image = upsample_bicubic(obs.raw_frames[0], factor);
            obs.scale = static_cast<double>(factor);
            break;
        }
        case Mode::sr: {
            const ShiftSet shifts =
                generate_offsets(cfg.sr_frames, obs_seed, base_jacobian);
            obs.raw_frames.reserve(static_cast<std::size_t>(cfg.sr_frames));
            const Vec2 saved = rig.commanded_mm();
            obs.raw_frames.push_back(rig.acquire_frame());
            for (const Vec2& cmd : shifts.commands_mm) {
                rig.move_by(cmd);
                obs.raw_frames.push_back(rig.acquire_frame());
            }
            rig.move_to(saved);  // exact commanded restore
            SrResult res = reconstruct_sr(obs.raw_frames, shifts, cfg.sr);
            obs.image = std::move(res.image);
            obs.scale = static_cast<double>(factor);
            break;
        }
    }

    if (rig.params().analytic_detection) {
        obs.estimate.center_px = base_to_observation_coords(
            analytic_tip_base, mode, mode == Mode::base ? 1 : factor);
        obs.estimate.radius_px =
            rig.params().marker_radius_mm * rig.params().camera.px_per_mm * obs.scale;
        obs.estimate.strength = 0.0;
        obs.estimate.refined = true;
        return obs;
    }

    const DetectOptions dopts = scaled_detect_options(cfg.detect, obs.scale);
    const auto circles = detect_circles(obs.image, dopts);
    if (circles.empty()) {
        std::ostringstream msg;
        msg << "acquire_observation: marker detection failed in " << mode_name(mode)
            << " mode (radius range " << dopts.radius_min_px << ".."
            << dopts.radius_max_px << " px)";
        throw std::runtime_error(msg.str());
    }
    obs.estimate = circles.front();
    return obs;
}

TrialRecord run_positioning_trial(SimulatedRig& rig, const NavLoopConfig& cfg) {
    if (cfg.punctures < 1)
        throw std::invalid_argument("run_positioning_trial: punctures must be >= 1");
    if (cfg.iteration_cap < 1)
        throw std::invalid_argument("run_positioning_trial: iteration_cap must be >= 1");
    cfg.sr.validate();
    cfg.detect.validate();

    TrialRecord rec;
    rec.mode = cfg.mode;
    const long frames_at_start = rig.frames_acquired();
    const double obs_scale =
        cfg.mode == Mode::base ? 1.0 : static_cast<double>(cfg.sr.upscale_factor);

    // Image Jacobian calibration. Each mode calibrates on the observation type
    // it later servos with, so calibration error stays proportional to that
    // mode's detection precision. SR observations need a Jacobian to command
    // their sub-pixel shift sequence, so the SR arm first bootstraps one from
    // three plain frames (the 2x Jacobian is the plain one scaled, so the
    // bootstrap only has to be good enough to command quarter-pixel moves).
    const Vec2 home = rig.commanded_mm();
    Mat2 boot = Mat2::identity();
    if (cfg.mode == Mode::sr) {
        const Image b0 = rig.acquire_frame();
        rig.move_to(home + Vec2{cfg.jacobian_step_mm, 0.0});
        const Image bx = rig.acquire_frame();
        rig.move_to(home + Vec2{0.0, cfg.jacobian_step_mm});
        const Image by = rig.acquire_frame();
        rig.move_to(home);
        if (rig.params().analytic_detection) {
            boot = rig.analytic_base_jacobian();
            (void)b0;
            (void)bx;
            (void)by;
        } else {
            const CenterDetector detector =
                [&](const Image& img) -> std::optional<Vec2> {
                const auto circles = detect_circles(img, cfg.detect);
                if (circles.empty()) return std::nullopt;
                return circles.front().center_px;
            };
            boot = estimate_image_jacobian(b0, bx, by, cfg.jacobian_step_mm, detector);
        }
    }

    const auto calibration_obs = [&](std::uint64_t k) {
        return acquire_observation(rig, cfg.mode, cfg, boot,
                                   Rng::derive(cfg.seed, 0xca1, k));
    };
    const Vec2 c0 = calibration_obs(0).estimate.center_px;
    rig.move_to(home + Vec2{cfg.jacobian_step_mm, 0.0});
    const Vec2 cx = calibration_obs(1).estimate.center_px;
    rig.move_to(home + Vec2{0.0, cfg.jacobian_step_mm});
    const Vec2 cy = calibration_obs(2).estimate.center_px;
    rig.move_to(home);
    const Mat2 obs_jacobian{(cx.x - c0.x) / cfg.jacobian_step_mm,
                            (cy.x - c0.x) / cfg.jacobian_step_mm,
                            (cx.y - c0.y) / cfg.jacobian_step_mm,
                            (cy.y - c0.y) / cfg.jacobian_step_mm};
    rec.base_jacobian = obs_jacobian * (1.0 / obs_scale);

    // The first puncture defines the target in observation coordinates.
    const Observation target_obs = acquire_observation(
        rig, cfg.mode, cfg, rec.base_jacobian, Rng::derive(cfg.seed, 0, 0));
    if (cfg.observation_sink) cfg.observation_sink(target_obs, 0, 0);
    const Vec2 target_px = target_obs.estimate.center_px;
    rec.punctures_mm.push_back(rig.record_puncture());
    rec.iterations.push_back(1);
    rec.converged.push_back(true);

    Rng start_rng(Rng::derive(cfg.seed, 0xb007));
    for (int p = 1; p < cfg.punctures; ++p) {
        const Vec2 start{start_rng.uniform(-cfg.start_range_mm, cfg.start_range_mm),
                         start_rng.uniform(-cfg.start_range_mm, cfg.start_range_mm)};
        rig.move_to(home + start);
        int observations = 0;
        bool ok = false;
        while (observations < cfg.iteration_cap) {
            const Observation obs =
                acquire_observation(rig, cfg.mode, cfg, rec.base_jacobian,
                                    Rng::derive(cfg.seed, static_cast<std::uint64_t>(p),
                                                static_cast<std::uint64_t>(observations) + 1));
            if (cfg.observation_sink) cfg.observation_sink(obs, p, observations);
            ++observations;
            const Vec2 err = target_px - obs.estimate.center_px;
            if (err.norm() < cfg.threshold_px) {
                ok = true;
                break;
            }
            rig.move_by(command_from_pixel_error(obs_jacobian, err));
        }
        rec.punctures_mm.push_back(rig.record_puncture());
        rec.iterations.push_back(observations);
        rec.converged.push_back(ok);
        rec.all_converged = rec.all_converged && ok;
    }

    rec.frames_acquired = rig.frames_acquired() - frames_at_start;
    rec.sim_minutes = static_cast<double>(rec.frames_acquired) *
                      rig.params().frame_cost_min;
    return rec;
}

}  // namespace srnav
