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

#include <functional>
#include <optional>
#include <utility>

#include "srnav/geometry.hpp"
#include "srnav/image.hpp"

// Parallel-plane needle positioner: two planar stages, each carrying a ball
// joint; the needle is the line through the two balls and the tip is its
// intersection with a treatment plane below.
namespace srnav {

struct RobotState {
    Vec2 top_offset_mm;     // in-plane displacement of the top stage
    Vec2 bottom_offset_mm;  // in-plane displacement of the bottom stage
    RigidTransform top_frame;     // stage-local (x, y, 0) -> world
    RigidTransform bottom_frame;
    double travel_limit_mm = 20.0;
};

// World positions of (top ball, bottom ball) via the stage transforms.
// Throws std::out_of_range when a stage offset exceeds the travel limit.
std::pair<Vec3, Vec3> forward_ball_positions(const RobotState& state);

// Unit-direction line; direction is oriented toward decreasing z when the
// segment has any vertical extent.
struct NeedleLine {
    Vec3 point;
    Vec3 direction;
};

// Throws std::invalid_argument if the balls coincide.
NeedleLine needle_line(const Vec3& upper_ball, const Vec3& lower_ball);

// Intersection with the horizontal plane z = plane_z. A line parallel to the
// plane has no unique intersection: it is reported as std::domain_error both
// when it misses the plane and when it lies inside it.
Vec3 intersect_line_plane(const NeedleLine& line, double plane_z);

// Detection callback used by Jacobian estimation; returns the marker center
// in image coordinates or std::nullopt on failure.
using CenterDetector = std::function<std::optional<Vec2>(const Image&)>;

// 2x2 image Jacobian (pixels per mm) by forward differences from three poses:
// a center pose, a +step_mm x move and a +step_mm y move. Throws
// std::runtime_error naming the failing pose if detection fails.
Mat2 estimate_image_jacobian(const Image& center_pose, const Image& x_step_pose,
                             const Image& y_step_pose, double step_mm,
                             const CenterDetector& detector);

// Stage correction (mm) that cancels a pixel error: solves J * cmd = err.
// Throws std::domain_error naming the condition number when |det J| <= 1e-6.
Vec2 command_from_pixel_error(const Mat2& jacobian, const Vec2& error_px);

}  // namespace srnav
