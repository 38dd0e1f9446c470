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

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

// Minimal fixed-size linear algebra for the 2-D/3-D needs of this library.
namespace srnav {

struct Vec2 {
    double x = 0.0, y = 0.0;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2& operator+=(const Vec2& o) {
        x += o.x;
        y += o.y;
        return *this;
    }
    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double norm() const { return std::sqrt(x * x + y * y); }
};

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

// Row-major 2x2 matrix [[a, b], [c, d]].
struct Mat2 {
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0;

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 rotation(double rad) {
        const double co = std::cos(rad), si = std::sin(rad);
        return {co, -si, si, co};
    }
    static Mat2 scale(double s) { return {s, 0.0, 0.0, s}; }

    Vec2 operator*(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 operator*(double s) const { return {a * s, b * s, c * s, d * s}; }

    double det() const { return a * d - b * c; }

    Mat2 inverse() const {
        const double dt = det();
        if (dt == 0.0) throw std::domain_error("Mat2::inverse: singular matrix");
        const double inv = 1.0 / dt;
        return {d * inv, -b * inv, -c * inv, a * inv};
    }

    // Largest/smallest singular values (closed form via the Gram matrix).
    double sigma_max() const {
        const double q = a * a + b * b + c * c + d * d;
        const double dt = det();
        const double disc = std::sqrt(std::max(0.0, q * q - 4.0 * dt * dt));
        return std::sqrt(0.5 * (q + disc));
    }
    double sigma_min() const {
        const double q = a * a + b * b + c * c + d * d;
        const double dt = det();
        const double disc = std::sqrt(std::max(0.0, q * q - 4.0 * dt * dt));
        return std::sqrt(std::max(0.0, 0.5 * (q - disc)));
    }
    double cond() const {
        const double smin = sigma_min();
        if (smin == 0.0) return std::numeric_limits<double>::infinity();
        return sigma_max() / smin;
    }
};

// Rigid transform: x_world = R * x_local + t, R row-major.
struct RigidTransform {
    double r[9] = {1, 0, 0, 0, 1, 0, 0, 0, 1};
    Vec3 t;

    static RigidTransform identity() { return {}; }
    static RigidTransform translation(const Vec3& t) {
        RigidTransform tf;
        tf.t = t;
        return tf;
    }
    static RigidTransform rotation_z(double rad, const Vec3& t = {}) {
        RigidTransform tf;
        const double co = std::cos(rad), si = std::sin(rad);
        tf.r[0] = co;
        tf.r[1] = -si;
        tf.r[3] = si;
        tf.r[4] = co;
        tf.t = t;
        return tf;
    }

    Vec3 apply(const Vec3& v) const {
        return {r[0] * v.x + r[1] * v.y + r[2] * v.z + t.x,
                r[3] * v.x + r[4] * v.y + r[5] * v.z + t.y,
                r[6] * v.x + r[7] * v.y + r[8] * v.z + t.z};
    }
};

}  // namespace srnav
