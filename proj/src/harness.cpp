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

#include "srnav/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "srnav/kernels.hpp"
#include "srnav/rng.hpp"

namespace srnav {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string trim(std::string_view s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string_view::npos) return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(begin, end - begin + 1));
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value,
                            const char* kind) {
    throw std::invalid_argument("config key '" + key + "': cannot parse '" + value +
                                "' as " + kind);
}

int parse_int(const std::string& key, const std::string& value) {
    int out = 0;
    const auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || p != value.data() + value.size())
        bad_value(key, value, "an integer");
    return out;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    std::uint64_t out = 0;
    const auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || p != value.data() + value.size())
        bad_value(key, value, "an unsigned integer");
    return out;
}

double parse_dbl(const std::string& key, const std::string& value) {
    double out = 0.0;
    const auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || p != value.data() + value.size())
        bad_value(key, value, "a number");
    return out;
}

bool parse_flag(const std::string& key, const std::string& value) {
    if (value == "1" || value == "true") return true;
    if (value == "0" || value == "false") return false;
    bad_value(key, value, "a boolean (0/1/true/false)");
}

// Ordered key=value accumulator shared by canonical() implementations.
class CanonicalText {
public:
    void put(std::string key, std::string value) {
        entries_.emplace_back(std::move(key), std::move(value));
    }
    void put(std::string key, double value) { put(std::move(key), format_double(value)); }
    void put(std::string key, int value) { put(std::move(key), std::to_string(value)); }
    void put(std::string key, std::uint64_t value) {
        put(std::move(key), std::to_string(value));
    }
    void put_flag(std::string key, bool value) {
        put(std::move(key), std::string(value ? "1" : "0"));
    }

    std::string str() {
        std::sort(entries_.begin(), entries_.end());
        std::string out;
        for (const auto& [k, v] : entries_) {
            out += k;
            out += " = ";
            out += v;
            out += '\n';
        }
        return out;
    }

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

// Keys shared by both experiments: degradation/SR/detection parameters.
void apply_degradation(DegradationParams& d, const std::string& key,
                       const std::string& value, bool& hit) {
    if (key == "degradation.blur_sigma_px")
        d.blur_sigma_px = parse_dbl(key, value);
    else if (key == "degradation.noise_sigma")
        d.noise_sigma = parse_dbl(key, value);
    else if (key == "degradation.downsample")
        d.downsample = parse_int(key, value);
    else
        return;
    hit = true;
}

void apply_sr(SrOptions& sr, const std::string& key, const std::string& value,
              bool& hit) {
    if (key == "sr.upscale_factor")
        sr.upscale_factor = parse_int(key, value);
    else if (key == "sr.blur_sigma_px")
        sr.blur_sigma_px = parse_dbl(key, value);
    else if (key == "sr.max_iterations")
        sr.max_iterations = parse_int(key, value);
    else if (key == "sr.mse_stop_fraction")
        sr.mse_stop_fraction = parse_dbl(key, value);
    else if (key == "sr.power_iterations")
        sr.power_iterations = parse_int(key, value);
    else
        return;
    hit = true;
}

void apply_detect(DetectOptions& det, const std::string& key, const std::string& value,
                  bool& hit) {
    if (key == "detect.radius_min_px")
        det.radius_min_px = parse_dbl(key, value);
    else if (key == "detect.radius_max_px")
        det.radius_max_px = parse_dbl(key, value);
    else if (key == "detect.max_count")
        det.max_count = parse_int(key, value);
    else if (key == "detect.gradient_threshold_sigmas")
        det.gradient_threshold_sigmas = parse_dbl(key, value);
    else if (key == "detect.min_support_frac")
        det.min_support_frac = parse_dbl(key, value);
    else
        return;
    hit = true;
}

void canonical_degradation(CanonicalText& out, const DegradationParams& d) {
    out.put("degradation.blur_sigma_px", d.blur_sigma_px);
    out.put("degradation.noise_sigma", d.noise_sigma);
    out.put("degradation.downsample", d.downsample);
}

void canonical_sr(CanonicalText& out, const SrOptions& sr) {
    out.put("sr.upscale_factor", sr.upscale_factor);
    out.put("sr.blur_sigma_px", sr.blur_sigma_px);
    out.put("sr.max_iterations", sr.max_iterations);
    out.put("sr.mse_stop_fraction", sr.mse_stop_fraction);
    out.put("sr.power_iterations", sr.power_iterations);
}

void canonical_detect(CanonicalText& out, const DetectOptions& det) {
    out.put("detect.radius_min_px", det.radius_min_px);
    out.put("detect.radius_max_px", det.radius_max_px);
    out.put("detect.max_count", det.max_count);
    out.put("detect.gradient_threshold_sigmas", det.gradient_threshold_sigmas);
    out.put("detect.min_support_frac", det.min_support_frac);
}

int resolve_jobs(int jobs, int count) {
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    return std::min(jobs, std::max(count, 1));
}

// Index-grabbing worker pool; results must be written by index so the output
// is independent of scheduling. The first exception wins and is rethrown.
void parallel_for(int count, int jobs, const std::function<void(int)>& body) {
    if (count <= 0) return;
    if (jobs <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::mutex err_mutex;
    std::exception_ptr first_error;
    auto worker = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= count) return;
            {
                std::scoped_lock lock(err_mutex);
                if (first_error) return;
            }
            try {
                body(i);
            } catch (...) {
                std::scoped_lock lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

DetectOptions scaled_detect(const DetectOptions& base, double scale) {
    DetectOptions out = base;
    out.radius_min_px *= scale;
    out.radius_max_px *= scale;
    return out;
}

std::string hash_hex(std::uint64_t h) {
    char buf[19];
    std::snprintf(buf, sizeof(buf), "0x%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    return out;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    auto out = open_out(path);
    out << text;
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

ordered_json config_json(const std::string& canonical_text) {
    ordered_json obj = ordered_json::object();
    std::istringstream in(canonical_text);
    std::string line;
    while (std::getline(in, line)) {
        const auto eq = line.find(" = ");
        if (eq == std::string::npos) continue;
        obj[line.substr(0, eq)] = line.substr(eq + 3);
    }
    return obj;
}

ordered_json f_tests_json(const std::vector<FTestEntry>& tests) {
    ordered_json arr = ordered_json::array();
    for (const auto& t : tests) {
        ordered_json e;
        e["sample_a"] = t.sample_a;
        e["sample_b"] = t.sample_b;
        e["f_statistic"] = t.result.f_statistic;
        e["df_num"] = t.result.df_num;
        e["df_den"] = t.result.df_den;
        e["p_value"] = t.result.p_value;
        arr.push_back(std::move(e));
    }
    return arr;
}

}  // namespace

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const char c : text) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string format_double(double v) {
    char buf[64];
    const auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, p);
}

std::map<std::string, std::string> parse_config_text(const std::string& text) {
    std::map<std::string, std::string> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value, got '" + stripped + "'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty())
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": empty key");
        out[key] = value;
    }
    return out;
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

// ---------------------------------------------------------------------------
// Numerical accuracy study
// ---------------------------------------------------------------------------

NumericalConfig::NumericalConfig() {
    // Calibration: enough sensor noise that detection jitter, which the
    // reconstruction averages down, dominates the sub-pixel bias floor of
    // every mode. The relative accuracy ordering is insensitive to the exact
    // value; 0.04 gives the native-resolution mode a comfortably measurable
    // handicap.
    degradation.noise_sigma = 0.04;
    // The degraded frame is blur (sigma 0.5) followed by pixel-area averaging
    // (variance 1/12), so the forward model defaults to the combined PSF.
    sr.blur_sigma_px = std::sqrt(degradation.blur_sigma_px * degradation.blur_sigma_px +
                                 1.0 / 12.0);
    detect.radius_min_px = 5.0;
    detect.radius_max_px = 12.0;
}

void NumericalConfig::apply(const std::map<std::string, std::string>& overrides) {
    // The forward-model PSF default is derived from the degradation blur, so
    // recompute it when the blur is overridden but the PSF is not.
    if (overrides.count("degradation.blur_sigma_px") &&
        !overrides.count("sr.blur_sigma_px")) {
        const double b =
            parse_dbl("degradation.blur_sigma_px", overrides.at("degradation.blur_sigma_px"));
        sr.blur_sigma_px = std::sqrt(b * b + 1.0 / 12.0);
    }
    for (const auto& [key, value] : overrides) {
        bool hit = false;
        apply_degradation(degradation, key, value, hit);
        apply_sr(sr, key, value, hit);
        apply_detect(detect, key, value, hit);
        if (hit) continue;
        if (key == "trials")
            trials = parse_int(key, value);
        else if (key == "seed")
            seed = parse_u64(key, value);
        else if (key == "jobs")
            jobs = parse_int(key, value);
        else if (key == "base_size_px")
            base_size_px = parse_int(key, value);
        else if (key == "supersample")
            supersample = parse_int(key, value);
        else if (key == "disk_radius_px")
            disk_radius_px = parse_dbl(key, value);
        else if (key == "center_dither_px")
            center_dither_px = parse_dbl(key, value);
        else if (key == "repeat_shift_px")
            repeat_shift_px = parse_dbl(key, value);
        else if (key == "sr_frames")
            sr_frames = parse_int(key, value);
        else if (key == "dump_frames")
            dump_frames = parse_flag(key, value);
        else
            throw std::invalid_argument("unknown config key '" + key + "'");
    }
}

std::string NumericalConfig::canonical() const {
    CanonicalText out;
    out.put("experiment", std::string("numerical"));
    out.put("trials", trials);
    out.put("seed", seed);
    out.put("base_size_px", base_size_px);
    out.put("supersample", supersample);
    out.put("disk_radius_px", disk_radius_px);
    out.put("center_dither_px", center_dither_px);
    out.put("repeat_shift_px", repeat_shift_px);
    out.put("sr_frames", sr_frames);
    canonical_degradation(out, degradation);
    canonical_sr(out, sr);
    canonical_detect(out, detect);
    return out.str();
}

void NumericalConfig::validate() const {
    if (trials < 1) throw std::invalid_argument("numerical: trials must be >= 1");
    if (base_size_px < 16)
        throw std::invalid_argument("numerical: base_size_px must be >= 16");
    if (supersample < 1)
        throw std::invalid_argument("numerical: supersample must be >= 1");
    if (disk_radius_px <= 0.0)
        throw std::invalid_argument("numerical: disk_radius_px must be positive");
    if (center_dither_px < 0.0)
        throw std::invalid_argument("numerical: center_dither_px must be >= 0");
    if (sr_frames < 1) throw std::invalid_argument("numerical: sr_frames must be >= 1");
    degradation.validate();
    sr.validate();
    detect.validate();
}

namespace {

constexpr const char* kModeNames[3] = {"base", "bicubic", "sr"};

struct NumericalTrialResult {
    std::array<NumericalReport::Row, 6> rows;  // measurement-major, mode-minor
    std::vector<double> sr_residual;           // kept for trial 0 only
    int sr_non_converged = 0;
};

NumericalReport::Row make_row(int trial, int measurement, int mode_idx,
                              const Vec2& truth, const Vec2& est_base,
                              const CircleEstimate& est, int base_size) {
    NumericalReport::Row row;
    row.trial = trial;
    row.measurement = measurement;
    row.mode = kModeNames[mode_idx];
    row.truth_px = truth;
    row.est_px = est_base;
    row.err_px = (est_base - truth).norm();
    row.normalized_error = row.err_px / static_cast<double>(base_size);
    row.est_obs_px = est.center_px;
    row.radius_obs_px = est.radius_px;
    row.strength = est.strength;
    return row;
}

CircleEstimate detect_one(const Image& img, const DetectOptions& opts,
                          const char* what) {
    const auto found = detect_circles(img, opts);
    if (found.empty()) {
        std::ostringstream msg;
        msg << "numerical: marker detection failed on the " << what
            << " observation (radius range " << opts.radius_min_px << ".."
            << opts.radius_max_px << " px)";
        throw std::runtime_error(msg.str());
    }
    return found.front();
}

NumericalTrialResult run_numerical_trial(const NumericalConfig& cfg, int trial) {
    NumericalTrialResult result;
    const int u = cfg.sr.upscale_factor;
    const double half = static_cast<double>(cfg.base_size_px) / 2.0;

    Rng dither_rng(Rng::derive(cfg.seed, static_cast<std::uint64_t>(trial), 0xd17e));
    const Vec2 dither{cfg.center_dither_px > 0.0
                          ? dither_rng.uniform(-cfg.center_dither_px, cfg.center_dither_px)
                          : 0.0,
                      cfg.center_dither_px > 0.0
                          ? dither_rng.uniform(-cfg.center_dither_px, cfg.center_dither_px)
                          : 0.0};

    for (int m = 0; m < 2; ++m) {
        const Vec2 truth{half + dither.x + (m == 1 ? cfg.repeat_shift_px : 0.0),
                         half + dither.y};
        GroundTruthCircle circle;
        circle.center_px = truth;
        circle.radius_px = cfg.disk_radius_px;
        const HighResImage hi =
            render_disk(circle, cfg.base_size_px, cfg.base_size_px, cfg.supersample);

        const ShiftSet shifts = generate_offsets(
            cfg.sr_frames,
            Rng::derive(cfg.seed, static_cast<std::uint64_t>(trial),
                        static_cast<std::uint64_t>(m), 0x0ff5),
            Mat2::identity());

        std::vector<Image> frames;
        frames.reserve(shifts.offsets_px.size());
        for (std::size_t k = 0; k < shifts.offsets_px.size(); ++k) {
            DegradationParams d = cfg.degradation;
            d.shift_px = shifts.offsets_px[k];
            d.rng_seed = Rng::derive(cfg.seed, static_cast<std::uint64_t>(trial),
                                     static_cast<std::uint64_t>(m), 0x10 + k);
            frames.push_back(degrade(hi, d));
        }

        if (cfg.dump_frames && !cfg.out_dir.empty()) {
            for (std::size_t k = 0; k < frames.size(); ++k) {
                std::ostringstream name;
                name << "trial" << trial << "_frame"
                     << (static_cast<std::size_t>(m) * frames.size() + k) << ".pgm";
                write_pgm(frames[k],
                          (std::filesystem::path(cfg.out_dir) / name.str()).string());
            }
        }

        const CircleEstimate base_est = detect_one(frames[0], cfg.detect, "base");
        result.rows[static_cast<std::size_t>(m) * 3 + 0] =
            make_row(trial, m, 0, truth, base_est.center_px, base_est, cfg.base_size_px);

        const Image bi = upsample_bicubic(frames[0], u);
        const CircleEstimate bi_est =
            detect_one(bi, scaled_detect(cfg.detect, u), "bicubic");
        result.rows[static_cast<std::size_t>(m) * 3 + 1] =
            make_row(trial, m, 1, truth, bicubic_to_base_coords(bi_est.center_px, u),
                     bi_est, cfg.base_size_px);

        SrResult sr = reconstruct_sr(frames, shifts, cfg.sr);
        const CircleEstimate sr_est =
            detect_one(sr.image, scaled_detect(cfg.detect, u), "super-resolved");
        result.rows[static_cast<std::size_t>(m) * 3 + 2] =
            make_row(trial, m, 2, truth, sr_to_base_coords(sr_est.center_px, u), sr_est,
                     cfg.base_size_px);
        if (!sr.converged) ++result.sr_non_converged;
        if (trial == 0 && m == 0) result.sr_residual = sr.residual_history;
    }
    return result;
}

}  // namespace

NumericalReport run_numerical_analysis(const NumericalConfig& cfg) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();

    if (cfg.dump_frames && !cfg.out_dir.empty())
        std::filesystem::create_directories(cfg.out_dir);

    std::vector<NumericalTrialResult> trials(static_cast<std::size_t>(cfg.trials));
    const int jobs = resolve_jobs(cfg.jobs, cfg.trials);
    parallel_for(cfg.trials, jobs,
                 [&](int t) { trials[static_cast<std::size_t>(t)] = run_numerical_trial(cfg, t); });

    NumericalReport report;
    report.config = cfg;
    report.config_hash = fnv1a64(cfg.canonical());
    report.isa = kernels::isa_name(kernels::active_isa());
    report.jobs_used = jobs;
    report.sr_residual_mse = trials[0].sr_residual;

    report.modes.resize(3);
    for (int mode = 0; mode < 3; ++mode) {
        auto& summary = report.modes[static_cast<std::size_t>(mode)];
        summary.mode = kModeNames[mode];
        summary.normalized_errors.reserve(static_cast<std::size_t>(cfg.trials) * 2);
    }
    report.rows.reserve(static_cast<std::size_t>(cfg.trials) * 6);
    for (const auto& trial : trials) {
        report.sr_non_converged += trial.sr_non_converged;
        for (const auto& row : trial.rows) report.rows.push_back(row);
        for (int m = 0; m < 2; ++m)
            for (int mode = 0; mode < 3; ++mode)
                report.modes[static_cast<std::size_t>(mode)].normalized_errors.push_back(
                    trial.rows[static_cast<std::size_t>(m) * 3 + mode].normalized_error);
    }
    for (auto& summary : report.modes) {
        summary.mean_error = mean(summary.normalized_errors);
        summary.std_error = sample_stddev(summary.normalized_errors);
    }

    const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (const auto& pair : pairs) {
        FTestEntry entry;
        entry.sample_a = kModeNames[pair[0]];
        entry.sample_b = kModeNames[pair[1]];
        entry.result = f_test_two_tailed(
            report.modes[static_cast<std::size_t>(pair[0])].normalized_errors,
            report.modes[static_cast<std::size_t>(pair[1])].normalized_errors);
        report.f_tests.push_back(std::move(entry));
    }

    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

void write_numerical_report(const NumericalReport& report) {
    const std::filesystem::path dir(report.config.out_dir);
    if (dir.empty())
        throw std::invalid_argument("write_numerical_report: out_dir is empty");
    std::filesystem::create_directories(dir);

    std::string errors_csv =
        "trial,measurement,mode,truth_x_px,truth_y_px,est_x_px,est_y_px,err_px,"
        "normalized_error\n";
    std::string detections_csv = "cx,cy,r,strength\n";
    for (const auto& row : report.rows) {
        errors_csv += std::to_string(row.trial) + ',' + std::to_string(row.measurement) +
                      ',' + row.mode + ',' + format_double(row.truth_px.x) + ',' +
                      format_double(row.truth_px.y) + ',' + format_double(row.est_px.x) +
                      ',' + format_double(row.est_px.y) + ',' + format_double(row.err_px) +
                      ',' + format_double(row.normalized_error) + '\n';
        detections_csv += format_double(row.est_obs_px.x) + ',' +
                          format_double(row.est_obs_px.y) + ',' +
                          format_double(row.radius_obs_px) + ',' +
                          format_double(row.strength) + '\n';
    }
    write_text(dir / "errors.csv", errors_csv);
    write_text(dir / "detections.csv", detections_csv);

    std::string residual_csv = "iteration,mse\n";
    for (std::size_t i = 0; i < report.sr_residual_mse.size(); ++i)
        residual_csv +=
            std::to_string(i) + ',' + format_double(report.sr_residual_mse[i]) + '\n';
    write_text(dir / "sr_residual.csv", residual_csv);

    ordered_json j;
    j["experiment"] = "numerical";
    j["seed"] = report.config.seed;
    j["config"] = config_json(report.config.canonical());
    j["config_hash"] = hash_hex(report.config_hash);
    j["isa"] = report.isa;
    j["normalized_error_definition"] =
        "euclidean center error in base pixels divided by the image width";
    ordered_json modes = ordered_json::object();
    for (const auto& summary : report.modes) {
        ordered_json m;
        m["samples"] = summary.normalized_errors.size();
        m["mean_normalized_error"] = summary.mean_error;
        m["std_normalized_error"] = summary.std_error;
        modes[summary.mode] = std::move(m);
    }
    j["modes"] = std::move(modes);
    j["f_tests"] = f_tests_json(report.f_tests);
    write_text(dir / "report.json", j.dump(2) + "\n");
}

// ---------------------------------------------------------------------------
// Benchtop closed-loop simulation
// ---------------------------------------------------------------------------

BenchtopConfig::BenchtopConfig() {
    // Calibrated so detection error dominates the landing scatter: the image
    // noise is high enough to separate the observation modes well clear of
    // the actuator repeatability floor, yet low enough that marker detection
    // never loses the disk during a sweep of the start-pose square.
    rig.noise_sigma = 0.05;
    rig.actuator_noise_mm = 0.002;
    nav.sr.blur_sigma_px =
        std::sqrt(rig.blur_sigma_px * rig.blur_sigma_px + 1.0 / 12.0);
}

void BenchtopConfig::apply(const std::map<std::string, std::string>& overrides) {
    if (overrides.count("rig.blur_sigma_px") && !overrides.count("sr.blur_sigma_px")) {
        const double b = parse_dbl("rig.blur_sigma_px", overrides.at("rig.blur_sigma_px"));
        nav.sr.blur_sigma_px = std::sqrt(b * b + 1.0 / 12.0);
    }
    for (const auto& [key, value] : overrides) {
        bool hit = false;
        apply_sr(nav.sr, key, value, hit);
        apply_detect(nav.detect, key, value, hit);
        if (hit) continue;
        if (key == "trials")
            trials = parse_int(key, value);
        else if (key == "punctures")
            nav.punctures = parse_int(key, value);
        else if (key == "seed")
            seed = parse_u64(key, value);
        else if (key == "jobs")
            jobs = parse_int(key, value);
        else if (key == "dump_frames")
            dump_frames = parse_flag(key, value);
        else if (key == "modes") {
            std::vector<Mode> parsed;
            std::istringstream in(value);
            std::string token;
            while (std::getline(in, token, ',')) {
                const auto mode = parse_mode(trim(token));
                if (!mode)
                    throw std::invalid_argument("config key 'modes': unknown mode '" +
                                                trim(token) + "'");
                parsed.push_back(*mode);
            }
            if (parsed.empty())
                throw std::invalid_argument("config key 'modes': empty mode list");
            modes = std::move(parsed);
        } else if (key == "rig.px_per_mm")
            rig.camera.px_per_mm = parse_dbl(key, value);
        else if (key == "rig.camera_rotation_rad")
            rig.camera.rotation_rad = parse_dbl(key, value);
        else if (key == "rig.camera_offset_x_px")
            rig.camera.offset_px.x = parse_dbl(key, value);
        else if (key == "rig.camera_offset_y_px")
            rig.camera.offset_px.y = parse_dbl(key, value);
        else if (key == "rig.fov_px")
            rig.fov_px = parse_int(key, value);
        else if (key == "rig.supersample")
            rig.supersample = parse_int(key, value);
        else if (key == "rig.marker_radius_mm")
            rig.marker_radius_mm = parse_dbl(key, value);
        else if (key == "rig.blur_sigma_px")
            rig.blur_sigma_px = parse_dbl(key, value);
        else if (key == "rig.noise_sigma")
            rig.noise_sigma = parse_dbl(key, value);
        else if (key == "rig.actuator_noise_mm")
            rig.actuator_noise_mm = parse_dbl(key, value);
        else if (key == "rig.puncture_noise_mm")
            rig.puncture_noise_mm = parse_dbl(key, value);
        else if (key == "rig.travel_limit_mm")
            rig.travel_limit_mm = parse_dbl(key, value);
        else if (key == "rig.top_plane_z_mm")
            rig.top_plane_z_mm = parse_dbl(key, value);
        else if (key == "rig.bottom_plane_z_mm")
            rig.bottom_plane_z_mm = parse_dbl(key, value);
        else if (key == "rig.treatment_plane_z_mm")
            rig.treatment_plane_z_mm = parse_dbl(key, value);
        else if (key == "rig.frame_cost_min")
            rig.frame_cost_min = parse_dbl(key, value);
        else if (key == "rig.analytic_detection")
            rig.analytic_detection = parse_flag(key, value);
        else if (key == "nav.iteration_cap")
            nav.iteration_cap = parse_int(key, value);
        else if (key == "nav.threshold_px")
            nav.threshold_px = parse_dbl(key, value);
        else if (key == "nav.jacobian_step_mm")
            nav.jacobian_step_mm = parse_dbl(key, value);
        else if (key == "nav.start_range_mm")
            nav.start_range_mm = parse_dbl(key, value);
        else if (key == "nav.sr_frames")
            nav.sr_frames = parse_int(key, value);
        else
            throw std::invalid_argument("unknown config key '" + key + "'");
    }
}

std::string BenchtopConfig::canonical() const {
    CanonicalText out;
    out.put("experiment", std::string("benchtop-sim"));
    out.put("trials", trials);
    out.put("punctures", nav.punctures);
    out.put("seed", seed);
    std::string mode_list;
    for (const Mode mode : modes) {
        if (!mode_list.empty()) mode_list += ',';
        mode_list += mode_name(mode);
    }
    out.put("modes", mode_list);
    out.put("rig.px_per_mm", rig.camera.px_per_mm);
    out.put("rig.camera_rotation_rad", rig.camera.rotation_rad);
    out.put("rig.camera_offset_x_px", rig.camera.offset_px.x);
    out.put("rig.camera_offset_y_px", rig.camera.offset_px.y);
    out.put("rig.fov_px", rig.fov_px);
    out.put("rig.supersample", rig.supersample);
    out.put("rig.marker_radius_mm", rig.marker_radius_mm);
    out.put("rig.blur_sigma_px", rig.blur_sigma_px);
    out.put("rig.noise_sigma", rig.noise_sigma);
    out.put("rig.actuator_noise_mm", rig.actuator_noise_mm);
    out.put("rig.puncture_noise_mm", rig.puncture_noise_mm);
    out.put("rig.travel_limit_mm", rig.travel_limit_mm);
    out.put("rig.top_plane_z_mm", rig.top_plane_z_mm);
    out.put("rig.bottom_plane_z_mm", rig.bottom_plane_z_mm);
    out.put("rig.treatment_plane_z_mm", rig.treatment_plane_z_mm);
    out.put("rig.frame_cost_min", rig.frame_cost_min);
    out.put_flag("rig.analytic_detection", rig.analytic_detection);
    out.put("nav.iteration_cap", nav.iteration_cap);
    out.put("nav.threshold_px", nav.threshold_px);
    out.put("nav.jacobian_step_mm", nav.jacobian_step_mm);
    out.put("nav.start_range_mm", nav.start_range_mm);
    out.put("nav.sr_frames", nav.sr_frames);
    canonical_sr(out, nav.sr);
    canonical_detect(out, nav.detect);
    return out.str();
}

void BenchtopConfig::validate() const {
    if (trials < 1) throw std::invalid_argument("benchtop: trials must be >= 1");
    if (nav.punctures < 2)
        throw std::invalid_argument("benchtop: punctures must be >= 2");
    if (modes.empty()) throw std::invalid_argument("benchtop: no modes selected");
    nav.sr.validate();
    nav.detect.validate();
}

namespace {

int frames_per_observation(Mode mode, const NavLoopConfig& nav) {
    return mode == Mode::sr ? nav.sr_frames : 1;
}

}  // namespace

BenchtopReport run_benchtop_sim(const BenchtopConfig& cfg) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();

    if (cfg.dump_frames && !cfg.out_dir.empty())
        std::filesystem::create_directories(cfg.out_dir);

    const int total = static_cast<int>(cfg.modes.size()) * cfg.trials;
    std::vector<TrialRecord> records(static_cast<std::size_t>(total));
    const int jobs = resolve_jobs(cfg.jobs, total);
    parallel_for(total, jobs, [&](int idx) {
        const int mode_idx = idx / cfg.trials;
        const int trial = idx % cfg.trials;
        const Mode mode = cfg.modes[static_cast<std::size_t>(mode_idx)];
        const auto mode_id = static_cast<std::uint64_t>(mode);

        NavLoopConfig nav = cfg.nav;
        nav.mode = mode;
        nav.seed = Rng::derive(cfg.seed, mode_id, static_cast<std::uint64_t>(trial), 0xa27);
        long dumped = 0;
        if (cfg.dump_frames && !cfg.out_dir.empty()) {
            nav.observation_sink = [&cfg, idx, &dumped](const Observation& obs, int, int) {
                for (const Image& frame : obs.raw_frames) {
                    std::ostringstream name;
                    name << "trial" << idx << "_frame" << dumped++ << ".pgm";
                    write_pgm(frame,
                              (std::filesystem::path(cfg.out_dir) / name.str()).string());
                }
            };
        }

        SimulatedRig rig(cfg.rig, Rng::derive(cfg.seed, mode_id,
                                              static_cast<std::uint64_t>(trial), 0x419));
        records[static_cast<std::size_t>(idx)] = run_positioning_trial(rig, nav);
    });

    BenchtopReport report;
    report.config = cfg;
    report.config_hash = fnv1a64(cfg.canonical());
    report.isa = kernels::isa_name(kernels::active_isa());
    report.jobs_used = jobs;
    report.trials = records;

    for (std::size_t mode_idx = 0; mode_idx < cfg.modes.size(); ++mode_idx) {
        BenchtopModeSummary summary;
        summary.mode = mode_name(cfg.modes[mode_idx]);
        summary.trials = cfg.trials;
        summary.punctures_per_trial = cfg.nav.punctures;

        double iter_sum = 0.0;
        long iter_count = 0;
        double frame_sum = 0.0;
        double minute_sum = 0.0;
        for (int t = 0; t < cfg.trials; ++t) {
            const auto& rec = records[mode_idx * static_cast<std::size_t>(cfg.trials) +
                                      static_cast<std::size_t>(t)];
            const PointSummary points = summarize(rec.punctures_mm);
            summary.pooled_distances_mm.insert(summary.pooled_distances_mm.end(),
                                               points.distances.begin(),
                                               points.distances.end());
            for (std::size_t p = 1; p < rec.iterations.size(); ++p) {
                iter_sum += rec.iterations[p];
                ++iter_count;
            }
            frame_sum += static_cast<double>(rec.frames_acquired);
            minute_sum += rec.sim_minutes;
            if (!rec.all_converged) ++summary.non_convergent_trials;
            if (t == 0) summary.base_jacobian = rec.base_jacobian;
        }
        summary.mean_distance_mm = mean(summary.pooled_distances_mm);
        summary.distance_std_mm = sample_stddev(summary.pooled_distances_mm);
        summary.mean_iterations =
            iter_count > 0 ? iter_sum / static_cast<double>(iter_count) : 0.0;
        summary.mean_frames_per_trial = frame_sum / static_cast<double>(cfg.trials);
        summary.mean_sim_minutes = minute_sum / static_cast<double>(cfg.trials);
        report.modes.push_back(std::move(summary));
    }

    for (std::size_t a = 0; a < report.modes.size(); ++a) {
        for (std::size_t b = a + 1; b < report.modes.size(); ++b) {
            FTestEntry entry;
            entry.sample_a = report.modes[a].mode;
            entry.sample_b = report.modes[b].mode;
            entry.result = f_test_two_tailed(report.modes[a].pooled_distances_mm,
                                             report.modes[b].pooled_distances_mm);
            report.f_tests.push_back(std::move(entry));
        }
    }

    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

void write_benchtop_report(const BenchtopReport& report) {
    const std::filesystem::path dir(report.config.out_dir);
    if (dir.empty())
        throw std::invalid_argument("write_benchtop_report: out_dir is empty");
    std::filesystem::create_directories(dir);

    std::string csv = "mode,puncture_idx,x_mm,y_mm,iterations,frames\n";
    for (std::size_t mode_idx = 0; mode_idx < report.config.modes.size(); ++mode_idx) {
        const Mode mode = report.config.modes[mode_idx];
        const int per_obs = frames_per_observation(mode, report.config.nav);
        for (int t = 0; t < report.config.trials; ++t) {
            const auto& rec =
                report.trials[mode_idx * static_cast<std::size_t>(report.config.trials) +
                              static_cast<std::size_t>(t)];
            for (std::size_t p = 0; p < rec.punctures_mm.size(); ++p) {
                csv += std::string(mode_name(mode)) + ',' + std::to_string(p) + ',' +
                       format_double(rec.punctures_mm[p].x) + ',' +
                       format_double(rec.punctures_mm[p].y) + ',' +
                       std::to_string(rec.iterations[p]) + ',' +
                       std::to_string(rec.iterations[p] * per_obs) + '\n';
            }
        }
    }
    write_text(dir / "punctures.csv", csv);

    ordered_json j;
    j["experiment"] = "benchtop-sim";
    j["seed"] = report.config.seed;
    j["config"] = config_json(report.config.canonical());
    j["config_hash"] = hash_hex(report.config_hash);
    j["isa"] = report.isa;
    j["precision_definition"] =
        "sample std of puncture distances to each trial's own centroid, pooled per "
        "mode; F-tests compare the pooled distance samples";
    ordered_json modes = ordered_json::object();
    for (const auto& summary : report.modes) {
        ordered_json m;
        m["trials"] = summary.trials;
        m["punctures_per_trial"] = summary.punctures_per_trial;
        m["samples"] = summary.pooled_distances_mm.size();
        m["mean_distance_mm"] = summary.mean_distance_mm;
        m["distance_std_mm"] = summary.distance_std_mm;
        m["mean_iterations"] = summary.mean_iterations;
        m["mean_frames_per_trial"] = summary.mean_frames_per_trial;
        m["mean_sim_minutes"] = summary.mean_sim_minutes;
        m["non_convergent_trials"] = summary.non_convergent_trials;
        m["base_jacobian"] = ordered_json::array(
            {ordered_json::array({summary.base_jacobian.a, summary.base_jacobian.b}),
             ordered_json::array({summary.base_jacobian.c, summary.base_jacobian.d})});
        modes[summary.mode] = std::move(m);
    }
    j["modes"] = std::move(modes);
    j["f_tests"] = f_tests_json(report.f_tests);
    write_text(dir / "report.json", j.dump(2) + "\n");
}

// ---------------------------------------------------------------------------
// Report verification
// ---------------------------------------------------------------------------

namespace {

struct Verifier {
    int mismatches = 0;

    // Values travel through shortest-round-trip decimal text, so recomputed
    // statistics must agree essentially bitwise; the epsilon only guards
    // against differently-ordered reductions in future refactors.
    void check(const std::string& what, double expected, double actual) {
        const double tol =
            1e-12 * std::max(1.0, std::max(std::abs(expected), std::abs(actual)));
        if (expected == actual || std::abs(expected - actual) <= tol) return;
        std::cout << "MISMATCH " << what << ": report " << format_double(expected)
                  << " recomputed " << format_double(actual) << "\n";
        ++mismatches;
    }

    void check_count(const std::string& what, long expected, long actual) {
        if (expected == actual) return;
        std::cout << "MISMATCH " << what << ": report " << expected << " recomputed "
                  << actual << "\n";
        ++mismatches;
    }
};

std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& path,
                                               const std::string& expected_header) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error(path.string() + ": empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != expected_header)
        throw std::runtime_error(path.string() + ": unexpected header '" + line + "'");
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) fields.push_back(field);
        rows.push_back(std::move(fields));
    }
    return rows;
}

double field_dbl(const std::string& s) {
    double out = 0.0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw std::runtime_error("csv: cannot parse number '" + s + "'");
    return out;
}

std::string rebuild_canonical(const ordered_json& config) {
    std::vector<std::pair<std::string, std::string>> entries;
    for (const auto& [k, v] : config.items())
        entries.emplace_back(k, v.get<std::string>());
    std::sort(entries.begin(), entries.end());
    std::string text;
    for (const auto& [k, v] : entries) text += k + " = " + v + '\n';
    return text;
}

void verify_f_tests(Verifier& v, const ordered_json& j,
                    const std::map<std::string, std::vector<double>>& samples) {
    std::size_t idx = 0;
    for (const auto& entry : j.at("f_tests")) {
        const std::string a = entry.at("sample_a").get<std::string>();
        const std::string b = entry.at("sample_b").get<std::string>();
        const std::string tag = "f_tests[" + std::to_string(idx++) + "](" + a + " vs " +
                                b + ")";
        const auto ita = samples.find(a);
        const auto itb = samples.find(b);
        if (ita == samples.end() || itb == samples.end()) {
            std::cout << "MISMATCH " << tag << ": unknown sample name\n";
            ++v.mismatches;
            continue;
        }
        const FTestResult res = f_test_two_tailed(ita->second, itb->second);
        v.check(tag + ".f_statistic", entry.at("f_statistic").get<double>(),
                res.f_statistic);
        v.check(tag + ".df_num", entry.at("df_num").get<double>(), res.df_num);
        v.check(tag + ".df_den", entry.at("df_den").get<double>(), res.df_den);
        v.check(tag + ".p_value", entry.at("p_value").get<double>(), res.p_value);
    }
}

bool verify_numerical(const std::filesystem::path& dir, const ordered_json& j) {
    Verifier v;
    const auto rows = read_csv(dir / "errors.csv",
                               "trial,measurement,mode,truth_x_px,truth_y_px,est_x_px,"
                               "est_y_px,err_px,normalized_error");
    std::map<std::string, std::vector<double>> samples;
    for (const auto& row : rows) {
        if (row.size() != 9) throw std::runtime_error("errors.csv: malformed row");
        samples[row[2]].push_back(field_dbl(row[8]));
    }

    for (const auto& [mode, m] : j.at("modes").items()) {
        const auto it = samples.find(mode);
        if (it == samples.end()) {
            std::cout << "MISMATCH modes." << mode << ": no rows in errors.csv\n";
            ++v.mismatches;
            continue;
        }
        v.check_count("modes." + mode + ".samples", m.at("samples").get<long>(),
                      static_cast<long>(it->second.size()));
        v.check("modes." + mode + ".mean_normalized_error",
                m.at("mean_normalized_error").get<double>(), mean(it->second));
        v.check("modes." + mode + ".std_normalized_error",
                m.at("std_normalized_error").get<double>(), sample_stddev(it->second));
    }
    verify_f_tests(v, j, samples);

    std::cout << "numerical report: " << rows.size() << " detections across "
              << samples.size() << " modes\n";
    for (const auto& [mode, m] : j.at("modes").items())
        std::cout << "  " << mode << ": mean normalized error "
                  << m.at("mean_normalized_error").get<double>() << ", std "
                  << m.at("std_normalized_error").get<double>() << "\n";
    for (const auto& entry : j.at("f_tests"))
        std::cout << "  F-test " << entry.at("sample_a").get<std::string>() << " vs "
                  << entry.at("sample_b").get<std::string>() << ": p = "
                  << entry.at("p_value").get<double>() << "\n";
    return v.mismatches == 0;
}

bool verify_benchtop(const std::filesystem::path& dir, const ordered_json& j) {
    Verifier v;
    const auto rows =
        read_csv(dir / "punctures.csv", "mode,puncture_idx,x_mm,y_mm,iterations,frames");

    // Rebuild trials: rows are mode-major in trial order; a new trial starts
    // at every puncture_idx == 0.
    struct TrialData {
        std::vector<Vec2> points;
        std::vector<long> iterations;
        long frames = 0;
    };
    std::map<std::string, std::vector<TrialData>> trials;
    for (const auto& row : rows) {
        if (row.size() != 6) throw std::runtime_error("punctures.csv: malformed row");
        const std::string& mode = row[0];
        const long idx = std::lround(field_dbl(row[1]));
        if (idx == 0) trials[mode].emplace_back();
        if (trials[mode].empty())
            throw std::runtime_error("punctures.csv: trial does not start at index 0");
        TrialData& trial = trials[mode].back();
        trial.points.push_back({field_dbl(row[2]), field_dbl(row[3])});
        trial.iterations.push_back(std::lround(field_dbl(row[4])));
        trial.frames += std::lround(field_dbl(row[5]));
    }

    const double frame_cost =
        field_dbl(j.at("config").at("rig.frame_cost_min").get<std::string>());
    const long cap =
        std::lround(field_dbl(j.at("config").at("nav.iteration_cap").get<std::string>()));
    const long sr_frames =
        std::lround(field_dbl(j.at("config").at("nav.sr_frames").get<std::string>()));

    std::map<std::string, std::vector<double>> samples;
    for (const auto& [mode, m] : j.at("modes").items()) {
        const auto it = trials.find(mode);
        if (it == trials.end()) {
            std::cout << "MISMATCH modes." << mode << ": no rows in punctures.csv\n";
            ++v.mismatches;
            continue;
        }
        std::vector<double> pooled;
        double iter_sum = 0.0;
        long iter_count = 0;
        double frame_sum = 0.0;
        long capped_trials = 0;
        for (const TrialData& trial : it->second) {
            const PointSummary points = summarize(trial.points);
            pooled.insert(pooled.end(), points.distances.begin(), points.distances.end());
            bool capped = false;
            for (std::size_t p = 1; p < trial.iterations.size(); ++p) {
                iter_sum += static_cast<double>(trial.iterations[p]);
                ++iter_count;
                capped = capped || trial.iterations[p] >= cap;
            }
            // The Jacobian estimation poses are not punctures, so the trial
            // total adds their frames on top of the per-puncture counts:
            // three own-mode observations, plus three plain bootstrap frames
            // in SR mode.
            const long jac_frames = mode == "sr" ? 3 + 3 * sr_frames : 3;
            frame_sum += static_cast<double>(trial.frames + jac_frames);
            if (capped) ++capped_trials;
        }
        v.check_count("modes." + mode + ".trials", m.at("trials").get<long>(),
                      static_cast<long>(it->second.size()));
        v.check_count("modes." + mode + ".samples", m.at("samples").get<long>(),
                      static_cast<long>(pooled.size()));
        v.check("modes." + mode + ".mean_distance_mm",
                m.at("mean_distance_mm").get<double>(), mean(pooled));
        v.check("modes." + mode + ".distance_std_mm",
                m.at("distance_std_mm").get<double>(), sample_stddev(pooled));
        v.check("modes." + mode + ".mean_iterations",
                m.at("mean_iterations").get<double>(),
                iter_count > 0 ? iter_sum / static_cast<double>(iter_count) : 0.0);
        const double trials_d = static_cast<double>(it->second.size());
        v.check("modes." + mode + ".mean_frames_per_trial",
                m.at("mean_frames_per_trial").get<double>(), frame_sum / trials_d);
        v.check("modes." + mode + ".mean_sim_minutes",
                m.at("mean_sim_minutes").get<double>(),
                frame_sum / trials_d * frame_cost);
        // Non-convergence is surfaced status rather than a statistic; a
        // non-converged puncture necessarily used the full iteration cap.
        const long reported = m.at("non_convergent_trials").get<long>();
        if (reported > capped_trials) {
            std::cout << "MISMATCH modes." << mode << ".non_convergent_trials: report "
                      << reported << " exceeds trials with cap-limited punctures ("
                      << capped_trials << ")\n";
            ++v.mismatches;
        }
        samples[mode] = std::move(pooled);
    }
    verify_f_tests(v, j, samples);

    std::cout << "benchtop report: " << rows.size() << " punctures across "
              << trials.size() << " modes\n";
    for (const auto& [mode, m] : j.at("modes").items())
        std::cout << "  " << mode << ": distance std " << m.at("distance_std_mm")
                  << " mm, mean iterations " << m.at("mean_iterations")
                  << ", mean frames/trial " << m.at("mean_frames_per_trial")
                  << ", non-convergent trials " << m.at("non_convergent_trials") << "\n";
    for (const auto& entry : j.at("f_tests"))
        std::cout << "  F-test " << entry.at("sample_a").get<std::string>() << " vs "
                  << entry.at("sample_b").get<std::string>() << ": p = "
                  << entry.at("p_value").get<double>() << "\n";
    return v.mismatches == 0;
}

}  // namespace

bool verify_report_dir(const std::string& dir) {
    const std::filesystem::path path(dir);
    std::ifstream in(path / "report.json");
    if (!in) throw std::runtime_error("cannot open " + (path / "report.json").string());
    ordered_json j;
    in >> j;

    const std::string experiment = j.at("experiment").get<std::string>();
    const std::string stored_hash = j.at("config_hash").get<std::string>();
    const std::string recomputed_hash =
        hash_hex(fnv1a64(rebuild_canonical(j.at("config"))));
    bool ok = true;
    if (stored_hash != recomputed_hash) {
        std::cout << "MISMATCH config_hash: report " << stored_hash << " recomputed "
                  << recomputed_hash << "\n";
        ok = false;
    }

    if (experiment == "numerical")
        ok = verify_numerical(path, j) && ok;
    else if (experiment == "benchtop-sim")
        ok = verify_benchtop(path, j) && ok;
    else
        throw std::runtime_error("report.json: unknown experiment '" + experiment + "'");

    std::cout << (ok ? "report verified: all statistics reproduce from the CSV data"
                     : "report verification FAILED")
              << "\n";
    return ok;
}

}  // namespace srnav
