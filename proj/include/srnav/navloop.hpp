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
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "srnav/detect.hpp"
#include "srnav/geometry.hpp"
#include "srnav/image.hpp"
#include "srnav/kinematics.hpp"
#include "srnav/rng.hpp"
#include "srnav/sr.hpp"

namespace srnav {

// Targeting mode: native camera frames, bicubic-upsampled frames, or
// multi-frame super-resolved observations.
enum class Mode { base, bicubic, sr };

const char* mode_name(Mode mode);
std::optional<Mode> parse_mode(std::string_view name);  // "base" | "bi" | "sr"

// Affine camera: px = scale * R(rotation) * world_mm + offset_px.
struct CameraModel {
    double px_per_mm = 1.0;
    double rotation_rad = 0.0;
    Vec2 offset_px{64.0, 64.0};

    Vec2 project(const Vec2& world_mm) const;
    Mat2 pixel_jacobian() const;  // d(px) / d(world mm)
};

struct RigParams {
    CameraModel camera;
    int fov_px = 128;
    int supersample = 4;
    double marker_radius_mm = 6.0;
    double blur_sigma_px = 0.5;      // camera PSF in base pixels
    double noise_sigma = 0.02;
    double actuator_noise_mm = 0.02;  // per-axis std added to every move
    double puncture_noise_mm = 0.0;   // per-axis std on recorded punctures
    double travel_limit_mm = 40.0;
    // Stage planes and the treatment plane carrying the needle tip.
    double top_plane_z_mm = 100.0;
    double bottom_plane_z_mm = 50.0;
    double treatment_plane_z_mm = 0.0;
    // When true, observations report the analytic projection of the true tip
    // instead of running the detector (isolates the control loop in tests).
    bool analytic_detection = false;
    double frame_cost_min = 0.05;  // simulated acquisition time per frame
};

// Top stage steers the needle; the bottom stage (and its ball joint) stays
// fixed, so the tip on the treatment plane follows the lever of the two-ball
// line. Commanded position is exact bookkeeping; every physical move adds
// actuator noise to the true position.
class SimulatedRig {
public:
    SimulatedRig(const RigParams& params, std::uint64_t seed);

    const RigParams& params() const { return params_; }
    Vec2 commanded_mm() const { return commanded_; }
    Vec2 true_top_offset_mm() const { return true_offset_; }
    Vec2 true_tip_mm() const;  // needle tip on the treatment plane
    Vec2 tip_px() const;       // analytic projection of the true tip
    // d(tip px) / d(top stage mm), the analytic counterpart of the estimated
    // image Jacobian.
    Mat2 analytic_base_jacobian() const;

    void move_by(const Vec2& delta_mm);
    void move_to(const Vec2& commanded_target_mm);
    Image acquire_frame();
    long frames_acquired() const { return frames_; }
    Vec2 record_puncture();

private:
    RigParams params_;
    Vec2 commanded_{0.0, 0.0};
    Vec2 true_offset_{0.0, 0.0};
    Rng rng_;
    long frames_ = 0;
};

struct NavLoopConfig {
    Mode mode = Mode::base;
    int punctures = 14;
    int iteration_cap = 20;        // observations allowed per puncture
    double threshold_px = 1.0;     // convergence, in the observation's own pixels
    double jacobian_step_mm = 15.0;
    double start_range_mm = 10.0;  // punctures start uniform in +-range
    int sr_frames = 4;
    SrOptions sr;                  // upscale factor shared by sr and bicubic modes
    DetectOptions detect;          // radius range in base pixels, scaled per mode
    std::uint64_t seed = 0;
    // Optional tap invoked after every servo observation (target included),
    // e.g. to dump the acquired frames.
    std::function<void(const struct Observation&, int puncture_idx, int observation_idx)>
        observation_sink;
};

struct Observation {
    Image image;                    // what the detector saw
    std::vector<Image> raw_frames;  // base-resolution frames acquired
    CircleEstimate estimate;        // center in observation coordinates
    double scale = 1.0;             // observation pixels per base pixel
};

// Acquires one observation in the given mode. SR mode acquires sr_frames
// frames at offsets commanded through the base Jacobian and restores the
// commanded pose afterwards. Throws std::runtime_error if detection fails.
Observation acquire_observation(SimulatedRig& rig, Mode mode, const NavLoopConfig& cfg,
                                const Mat2& base_jacobian, std::uint64_t obs_seed);

struct TrialRecord {
    Mode mode = Mode::base;
    std::vector<Vec2> punctures_mm;  // recorded tip positions
    std::vector<int> iterations;     // observations used per puncture
    std::vector<bool> converged;
    bool all_converged = true;
    long frames_acquired = 0;
    double sim_minutes = 0.0;
    Mat2 base_jacobian;
};

// Full trial: Jacobian calibration from three own-mode observations (SR
// bootstraps the Jacobian that commands its shift sequence from three plain
// frames first), a target-defining first puncture, then punctures-1 servo
// runs from random start poses. Punctures that hit the iteration cap are
// recorded and flagged non-converged.
TrialRecord run_positioning_trial(SimulatedRig& rig, const NavLoopConfig& cfg);

}  // namespace srnav
