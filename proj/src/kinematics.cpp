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

#include "srnav/kinematics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace srnav {

std::pair<Vec3, Vec3> forward_ball_positions(const RobotState& state) {
    const auto check = [&](const Vec2& offset, const char* which) {
        if (std::abs(offset.x) > state.travel_limit_mm ||
            std::abs(offset.y) > state.travel_limit_mm) {
            std::ostringstream msg;
            msg << "forward_ball_positions: " << which << " stage offset ("
                << offset.x << ", " << offset.y << ") exceeds travel limit "
                << state.travel_limit_mm << " mm";
            throw std::out_of_range(msg.str());
        }
    };
    check(state.top_offset_mm, "top");
    check(state.bottom_offset_mm, "bottom");
    const Vec3 top = state.top_frame.apply(
        {state.top_offset_mm.x, state.top_offset_mm.y, 0.0});
    const Vec3 bottom = state.bottom_frame.apply(
        {state.bottom_offset_mm.x, state.bottom_offset_mm.y, 0.0});
    return {top, bottom};
}

NeedleLine needle_line(const Vec3& upper_ball, const Vec3& lower_ball) {
    const Vec3 diff = lower_ball - upper_ball;
    const double len = diff.norm();
    if (len == 0.0)
        throw std::invalid_argument("needle_line: ball joints coincide");
    Vec3 dir = diff * (1.0 / len);
    if (dir.z > 0.0) dir = dir * -1.0;
    return {upper_ball, dir};
}

Vec3 intersect_line_plane(const NeedleLine& line, double plane_z) {
    if (line.direction.z == 0.0) {
        if (line.point.z == plane_z)
            throw std::domain_error(
                "intersect_line_plane: line lies in the plane; intersection not unique");
        throw std::domain_error(
            "intersect_line_plane: line is parallel to the plane; no intersection");
    }
    const double t = (plane_z - line.point.z) / line.direction.z;
    return line.point + line.direction * t;
}

Mat2 estimate_image_jacobian(const Image& center_pose, const Image& x_step_pose,
                             const Image& y_step_pose, double step_mm,
                             const CenterDetector& detector) {
    if (step_mm == 0.0)
        throw std::invalid_argument("estimate_image_jacobian: step_mm must be nonzero");
    if (!detector)
        throw std::invalid_argument("estimate_image_jacobian: detector is empty");
    const auto detect_or_throw = [&](const Image& img, const char* pose) {
        const std::optional<Vec2> c = detector(img);
        if (!c) {
            throw std::runtime_error(
                std::string("estimate_image_jacobian: detection failed on the ") +
                pose + " pose");
        }
        return *c;
    };
    const Vec2 c0 = detect_or_throw(center_pose, "center");
    const Vec2 cx = detect_or_throw(x_step_pose, "x-step");
    const Vec2 cy = detect_or_throw(y_step_pose, "y-step");
    const Vec2 dx = (cx - c0) * (1.0 / step_mm);
    const Vec2 dy = (cy - c0) * (1.0 / step_mm);
    return {dx.x, dy.x, dx.y, dy.y};
}

Vec2 command_from_pixel_error(const Mat2& jacobian, const Vec2& error_px) {
    if (std::abs(jacobian.det()) <= 1e-6) {
        std::ostringstream msg;
        msg << "command_from_pixel_error: Jacobian is singular (|det| = "
            << std::abs(jacobian.det()) << ", condition number = " << jacobian.cond()
            << ")";
        throw std::domain_error(msg.str());
    }
    return jacobian.inverse() * error_px;
}

}  // namespace srnav
