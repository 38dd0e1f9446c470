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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "srnav/harness.hpp"

using namespace srnav;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() / ("srnav_test_" + tag);
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

// Small but statistically alive numerical configuration.
NumericalConfig small_numerical(const std::string& out_dir, int jobs) {
    NumericalConfig cfg;
    cfg.apply({{"trials", "6"},
               {"base_size_px", "64"},
               {"supersample", "4"},
               {"disk_radius_px", "6.0"},
               {"detect.radius_min_px", "3"},
               {"detect.radius_max_px", "10"}});
    cfg.jobs = jobs;
    cfg.out_dir = out_dir;
    return cfg;
}

BenchtopConfig small_benchtop(const std::string& out_dir, int jobs) {
    BenchtopConfig cfg;
    cfg.apply({{"trials", "2"}, {"punctures", "4"}, {"modes", "base,sr"}});
    cfg.jobs = jobs;
    cfg.out_dir = out_dir;
    return cfg;
}

}  // namespace

TEST_CASE("flat config text parses keys, comments, and blanks") {
    const auto kv = parse_config_text(
        "# leading comment\n"
        "trials = 12\n"
        "\n"
        "degradation.noise_sigma = 0.05  \n"
        "  seed=9\n");
    CHECK(kv.at("trials") == "12");
    CHECK(kv.at("degradation.noise_sigma") == "0.05");
    CHECK(kv.at("seed") == "9");
    CHECK_THROWS_AS(parse_config_text("not a key value line\n"), std::invalid_argument);
}

TEST_CASE("unknown keys and malformed values are rejected by name") {
    NumericalConfig cfg;
    CHECK_THROWS_WITH_AS(cfg.apply({{"bogus_key", "1"}}),
                         doctest::Contains("bogus_key"), std::invalid_argument);
    CHECK_THROWS_AS(cfg.apply({{"trials", "several"}}), std::invalid_argument);
    BenchtopConfig bench;
    CHECK_THROWS_WITH_AS(bench.apply({{"modes", "base,warp"}}),
                         doctest::Contains("warp"), std::invalid_argument);
}

TEST_CASE("config hash changes with any parameter and is stable otherwise") {
    NumericalConfig a;
    NumericalConfig b;
    CHECK(fnv1a64(a.canonical()) == fnv1a64(b.canonical()));
    b.apply({{"trials", "101"}});
    CHECK(fnv1a64(a.canonical()) != fnv1a64(b.canonical()));
    NumericalConfig c;
    c.apply({{"degradation.noise_sigma", "0.041"}});
    CHECK(fnv1a64(a.canonical()) != fnv1a64(c.canonical()));
    // Worker count and output location are execution details, not experiment
    // identity: they must not perturb the hash.
    NumericalConfig d;
    d.jobs = 7;
    d.out_dir = "/elsewhere";
    CHECK(fnv1a64(a.canonical()) == fnv1a64(d.canonical()));
}

TEST_CASE("format_double round-trips shortest decimal forms") {
    for (double v : {0.1, 1.0 / 3.0, 123456.789, -2.5e-9, 0.0}) {
        const std::string s = format_double(v);
        CHECK(std::stod(s) == v);
    }
    CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("numerical experiment is byte-identical across worker counts") {
    TempDir d1("num_jobs1");
    TempDir d3("num_jobs3");
    const NumericalReport r1 = run_numerical_analysis(small_numerical(d1.path.string(), 1));
    const NumericalReport r3 = run_numerical_analysis(small_numerical(d3.path.string(), 3));
    CHECK(r1.jobs_used == 1);
    CHECK(r3.jobs_used == 3);
    write_numerical_report(r1);
    write_numerical_report(r3);
    for (const char* name : {"report.json", "errors.csv", "detections.csv",
                             "sr_residual.csv"}) {
        INFO(name);
        CHECK(slurp(d1.path / name) == slurp(d3.path / name));
    }
}

TEST_CASE("numerical report round-trips through the verifier") {
    TempDir dir("num_verify");
    const NumericalConfig cfg = small_numerical(dir.path.string(), 0);
    NumericalReport report = run_numerical_analysis(cfg);
    write_numerical_report(report);
    CHECK(verify_report_dir(dir.path.string()));
    REQUIRE(report.modes.size() == 3);
    for (const auto& m : report.modes) {
        REQUIRE(!m.normalized_errors.empty());
        CHECK(m.mean_error == doctest::Approx(mean(m.normalized_errors)).epsilon(1e-12));
    }
    REQUIRE(report.f_tests.size() == 3);
    // A corrupted statistic must be caught.
    const fs::path json_path = dir.path / "report.json";
    std::string text = slurp(json_path);
    const std::string needle = "\"mean_normalized_error\": ";
    const auto pos = text.find(needle);
    REQUIRE(pos != std::string::npos);
    text.insert(pos + needle.size(), "1");  // prepend a digit: value changes
    std::ofstream(json_path, std::ios::binary) << text;
    CHECK(!verify_report_dir(dir.path.string()));
}

TEST_CASE("benchtop experiment is byte-identical across worker counts") {
    TempDir d1("bench_jobs1");
    TempDir d3("bench_jobs3");
    const BenchtopReport r1 = run_benchtop_sim(small_benchtop(d1.path.string(), 1));
    const BenchtopReport r3 = run_benchtop_sim(small_benchtop(d3.path.string(), 3));
    write_benchtop_report(r1);
    write_benchtop_report(r3);
    for (const char* name : {"report.json", "punctures.csv"}) {
        INFO(name);
        CHECK(slurp(d1.path / name) == slurp(d3.path / name));
    }
}

TEST_CASE("benchtop report round-trips through the verifier") {
    TempDir dir("bench_verify");
    const BenchtopConfig cfg = small_benchtop(dir.path.string(), 0);
    const BenchtopReport report = run_benchtop_sim(cfg);
    write_benchtop_report(report);
    CHECK(verify_report_dir(dir.path.string()));
    REQUIRE(report.modes.size() == 2);
    CHECK(report.modes[0].mode == "base");
    CHECK(report.modes[1].mode == "sr");
    // SR observes with four frames, so it must cost more simulated time.
    CHECK(report.modes[1].mean_sim_minutes > report.modes[0].mean_sim_minutes);
    REQUIRE(report.f_tests.size() == 1);
}

TEST_CASE("mode list order does not change per-mode results") {
    TempDir fwd("modes_fwd");
    TempDir rev("modes_rev");
    BenchtopConfig a = small_benchtop(fwd.path.string(), 1);
    BenchtopConfig b = small_benchtop(rev.path.string(), 1);
    b.apply({{"modes", "sr,base"}});
    const BenchtopReport ra = run_benchtop_sim(a);
    const BenchtopReport rb = run_benchtop_sim(b);
    REQUIRE(ra.modes.size() == 2);
    REQUIRE(rb.modes.size() == 2);
    // base is summary 0 in one report and summary 1 in the other, with
    // identical pooled statistics either way.
    CHECK(ra.modes[0].distance_std_mm == rb.modes[1].distance_std_mm);
    CHECK(ra.modes[1].distance_std_mm == rb.modes[0].distance_std_mm);
}

TEST_CASE("config files merge under CLI-style overrides") {
    TempDir dir("config_file");
    const fs::path cfg_path = dir.path / "exp.cfg";
    std::ofstream(cfg_path) << "trials = 3\nseed = 11\n# comment\n";
    const auto kv = read_config_file(cfg_path.string());
    CHECK(kv.at("trials") == "3");
    CHECK(kv.at("seed") == "11");
    CHECK_THROWS_AS(read_config_file((dir.path / "missing.cfg").string()),
                    std::runtime_error);
}
