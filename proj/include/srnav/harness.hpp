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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "srnav/detect.hpp"
#include "srnav/navloop.hpp"
#include "srnav/scene.hpp"
#include "srnav/sr.hpp"
#include "srnav/stats.hpp"

namespace srnav {

// FNV-1a, used to fingerprint canonical config text in reports.
std::uint64_t fnv1a64(std::string_view text);

// Shortest decimal form that parses back to the same double (CSV/canonical
// config serialization both rely on this round trip).
std::string format_double(double v);

// Flat `key = value` overrides; '#' starts a comment, blank lines are
// ignored. Throws std::invalid_argument on lines without '='.
std::map<std::string, std::string> parse_config_text(const std::string& text);
std::map<std::string, std::string> read_config_file(const std::string& path);

// Marker-center accuracy study: per trial, render a dithered disk, degrade it
// into four sub-pixel-shifted low-resolution frames, and measure the detected
// center error of the native frame, its bicubic upsample, and the
// super-resolved reconstruction; then repeat with the disk moved one pixel
// to the right. Errors are normalized by the image width.
struct NumericalConfig {
    NumericalConfig();

    int trials = 100;
    std::uint64_t seed = 7;
    int jobs = 0;  // worker threads; 0 = one per hardware thread
    int base_size_px = 128;
    int supersample = 8;           // ground-truth raster density per base pixel
    double disk_radius_px = 8.0;   // base pixels
    double center_dither_px = 0.5; // per-axis uniform dither of the disk center
    double repeat_shift_px = 1.0;  // rightward shift of the repeated measurement
    int sr_frames = 4;
    DegradationParams degradation;  // shift/seed fields are overwritten per frame
    SrOptions sr;
    DetectOptions detect;  // base-pixel units, scaled for upsampled observations
    bool dump_frames = false;
    std::string out_dir;

    void apply(const std::map<std::string, std::string>& overrides);
    std::string canonical() const;  // sorted key=value lines, hashed for provenance
    void validate() const;
};

struct FTestEntry {
    std::string sample_a;
    std::string sample_b;
    FTestResult result;
};

struct ModeErrorSummary {
    std::string mode;
    std::vector<double> normalized_errors;  // trial-major, measurement-minor
    double mean_error = 0.0;
    double std_error = 0.0;
};

struct NumericalReport {
    // One detection outcome; est coordinates are converted to base pixels,
    // obs fields stay in the observation's own pixels for the debug dump.
    struct Row {
        int trial = 0;
        int measurement = 0;  // 0 = original center, 1 = shifted one pixel right
        std::string mode;
        Vec2 truth_px;
        Vec2 est_px;
        double err_px = 0.0;
        double normalized_error = 0.0;
        Vec2 est_obs_px;
        double radius_obs_px = 0.0;
        double strength = 0.0;
    };

    NumericalConfig config;
    std::uint64_t config_hash = 0;
    std::string isa;
    int jobs_used = 1;
    double wall_seconds = 0.0;
    std::vector<ModeErrorSummary> modes;  // base, bicubic, sr
    std::vector<FTestEntry> f_tests;
    std::vector<double> sr_residual_mse;  // history of trial 0, measurement 0
    std::vector<Row> rows;
    int sr_non_converged = 0;  // reconstructions stopped by the iteration cap
};

NumericalReport run_numerical_analysis(const NumericalConfig& cfg);

// Writes report.json, errors.csv, detections.csv, sr_residual.csv (and PGM
// frame dumps when enabled) into cfg.out_dir.
void write_numerical_report(const NumericalReport& report);

// Closed-loop positioning study: per mode and per trial seed, a fresh
// simulated rig runs a full positioning trial; puncture scatter is summarized
// as distances to each trial's own centroid, pooled per mode.
struct BenchtopConfig {
    BenchtopConfig();

    int trials = 10;  // independent trial seeds per mode
    std::uint64_t seed = 7;
    int jobs = 0;
    std::vector<Mode> modes{Mode::base, Mode::bicubic, Mode::sr};
    RigParams rig;
    NavLoopConfig nav;  // mode/punctures/seed fields are overwritten per run
    bool dump_frames = false;
    std::string out_dir;

    void apply(const std::map<std::string, std::string>& overrides);
    std::string canonical() const;
    void validate() const;
};

struct BenchtopModeSummary {
    std::string mode;
    int trials = 0;
    int punctures_per_trial = 0;
    std::vector<double> pooled_distances_mm;  // to own-trial centroid
    double mean_distance_mm = 0.0;
    double distance_std_mm = 0.0;
    double mean_iterations = 0.0;  // servo punctures only (target excluded)
    double mean_frames_per_trial = 0.0;
    double mean_sim_minutes = 0.0;
    int non_convergent_trials = 0;
    Mat2 base_jacobian;  // estimated in the first trial
};

struct BenchtopReport {
    BenchtopConfig config;
    std::uint64_t config_hash = 0;
    std::string isa;
    int jobs_used = 1;
    double wall_seconds = 0.0;
    std::vector<BenchtopModeSummary> modes;
    std::vector<FTestEntry> f_tests;  // on pooled distance samples
    std::vector<TrialRecord> trials;  // mode-major, trial-minor
};

BenchtopReport run_benchtop_sim(const BenchtopConfig& cfg);

// Writes report.json and punctures.csv (and PGM frame dumps when enabled)
// into cfg.out_dir.
void write_benchtop_report(const BenchtopReport& report);

// Re-derives every statistic in DIR/report.json from the raw CSV next to it
// and prints a summary; returns false (after printing the mismatches) if any
// value fails to reproduce.
bool verify_report_dir(const std::string& dir);

}  // namespace srnav
