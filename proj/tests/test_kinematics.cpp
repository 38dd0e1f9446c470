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

#include <cmath>
#include <stdexcept>

#include "srnav/kinematics.hpp"
#include "srnav/rng.hpp"

using namespace srnav;

namespace {

// Independent 4x4 homogeneous-transform oracle for the stage frames.
Vec3 homogeneous_apply(const RigidTransform& tf, const Vec3& v) {
    double m[4][4] = {{tf.r[0], tf.r[1], tf.r[2], tf.t.x},
                      {tf.r[3], tf.r[4], tf.r[5], tf.t.y},
                      {tf.r[6], tf.r[7], tf.r[8], tf.t.z},
                      {0.0, 0.0, 0.0, 1.0}};
    const double in[4] = {v.x, v.y, v.z, 1.0};
    double out[4] = {0.0, 0.0, 0.0, 0.0};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[i] += m[i][j] * in[j];
    return {out[0] / out[3], out[1] / out[3], out[2] / out[3]};
}

RobotState make_state(double tx, double ty, double bx, double by, double top_rot,
                      double bottom_rot, double top_z, double bottom_z) {
    RobotState s;
    s.top_offset_mm = {tx, ty};
    s.bottom_offset_mm = {bx, by};
    s.top_frame = RigidTransform::rotation_z(top_rot, {0.0, 0.0, top_z});
    s.bottom_frame = RigidTransform::rotation_z(bottom_rot, {0.0, 0.0, bottom_z});
    s.travel_limit_mm = 50.0;
    return s;
}

}  // namespace

TEST_CASE("ball positions match the homogeneous-transform oracle") {
    const RobotState s = make_state(3.2, -1.4, -2.0, 0.7, 0.3, -1.1, 100.0, 55.0);
    const auto [top, bottom] = forward_ball_positions(s);
    const Vec3 top_oracle =
        homogeneous_apply(s.top_frame, {s.top_offset_mm.x, s.top_offset_mm.y, 0.0});
    const Vec3 bot_oracle = homogeneous_apply(
        s.bottom_frame, {s.bottom_offset_mm.x, s.bottom_offset_mm.y, 0.0});
    CHECK(std::abs(top.x - top_oracle.x) < 1e-12);
    CHECK(std::abs(top.y - top_oracle.y) < 1e-12);
    CHECK(std::abs(top.z - top_oracle.z) < 1e-12);
    CHECK(std::abs(bottom.x - bot_oracle.x) < 1e-12);
    CHECK(std::abs(bottom.y - bot_oracle.y) < 1e-12);
    CHECK(std::abs(bottom.z - bot_oracle.z) < 1e-12);
}

TEST_CASE("a thousand random states round-trip through line recovery") {
    Rng rng(2024);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double top_z = rng.uniform(80.0, 120.0);
        const double bottom_z = rng.uniform(30.0, 60.0);
        const RobotState s = make_state(
            rng.uniform(-20.0, 20.0), rng.uniform(-20.0, 20.0),
            rng.uniform(-20.0, 20.0), rng.uniform(-20.0, 20.0),
            rng.uniform(-3.14, 3.14), rng.uniform(-3.14, 3.14), top_z, bottom_z);
        const auto [top, bottom] = forward_ball_positions(s);
        const NeedleLine line = needle_line(top, bottom);
        const Vec3 top_back = intersect_line_plane(line, top_z);
        const Vec3 bottom_back = intersect_line_plane(line, bottom_z);
        worst = std::max({worst, (top_back - top).norm(), (bottom_back - bottom).norm()});
        // And the treatment-plane tip lies on the line.
        const Vec3 tip = intersect_line_plane(line, 0.0);
        const Vec3 along = line.point + line.direction * ((tip - line.point).dot(line.direction));
        worst = std::max(worst, (tip - along).norm());
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("degenerate geometry raises defined errors") {
    CHECK_THROWS_AS(needle_line({1.0, 2.0, 3.0}, {1.0, 2.0, 3.0}), std::invalid_argument);
    // A horizontal needle is parallel to every horizontal plane.
    const NeedleLine level = needle_line({0.0, 0.0, 10.0}, {5.0, 0.0, 10.0});
    CHECK_THROWS_AS(intersect_line_plane(level, 0.0), std::domain_error);
    CHECK_THROWS_AS(intersect_line_plane(level, 10.0), std::domain_error);
}

TEST_CASE("travel limits are enforced") {
    RobotState s = make_state(30.0, 0.0, 0.0, 0.0, 0.0, 0.0, 100.0, 50.0);
    s.travel_limit_mm = 20.0;
    CHECK_THROWS_AS(forward_ball_positions(s), std::out_of_range);
}

TEST_CASE("needle direction points toward decreasing z") {
    const NeedleLine line = needle_line({0.0, 0.0, 100.0}, {3.0, 4.0, 50.0});
    CHECK(line.direction.z < 0.0);
    CHECK(std::abs(line.direction.norm() - 1.0) < 1e-12);
    const NeedleLine flipped = needle_line({3.0, 4.0, 50.0}, {0.0, 0.0, 100.0});
    CHECK(flipped.direction.z < 0.0);
}

TEST_CASE("jacobian estimation inverts a synthetic affine camera") {
    // Detector reads the pose directly out of the fake image's first pixels.
    const Mat2 true_jac{1.4, -0.3, 0.8, 2.1};
    const auto fake_image = [&](const Vec2& pose_mm) {
        Image img(2, 1);
        const Vec2 px = true_jac * pose_mm + Vec2{40.0, 40.0};
        img.at(0, 0) = px.x;
        img.at(1, 0) = px.y;
        return img;
    };
    const CenterDetector detector = [](const Image& img) -> std::optional<Vec2> {
        return Vec2{img.at(0, 0), img.at(1, 0)};
    };
    const double step = 12.5;
    const Mat2 est = estimate_image_jacobian(fake_image({0.0, 0.0}),
                                             fake_image({step, 0.0}),
                                             fake_image({0.0, step}), step, detector);
    CHECK(std::abs(est.a - true_jac.a) < 1e-12);
    CHECK(std::abs(est.b - true_jac.b) < 1e-12);
    CHECK(std::abs(est.c - true_jac.c) < 1e-12);
    CHECK(std::abs(est.d - true_jac.d) < 1e-12);

    const CenterDetector blind = [](const Image&) { return std::nullopt; };
    CHECK_THROWS_WITH_AS(
        estimate_image_jacobian(fake_image({0.0, 0.0}), fake_image({step, 0.0}),
                                fake_image({0.0, step}), step, blind),
        doctest::Contains("pose"), std::runtime_error);
}

TEST_CASE("pixel errors convert to stage commands through the Jacobian") {
    const Mat2 jac{2.0, 0.5, -0.25, 1.75};
    const Vec2 err{3.0, -1.5};
    const Vec2 cmd = command_from_pixel_error(jac, err);
    const Vec2 realized = jac * cmd;
    CHECK(std::abs(realized.x - err.x) < 1e-12);
    CHECK(std::abs(realized.y - err.y) < 1e-12);

    const Mat2 singular{1.0, 1.0, 2.0, 2.0};
    CHECK_THROWS_WITH_AS(command_from_pixel_error(singular, err),
                         doctest::Contains("condition"), std::domain_error);
}
