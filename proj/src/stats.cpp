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

#include "srnav/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace srnav {

double mean(std::span<const double> xs) {
    if (xs.empty()) throw std::invalid_argument("mean: empty sample");
    double acc = 0.0;
    for (double x : xs) acc += x;
    return acc / static_cast<double>(xs.size());
}

double sample_variance(std::span<const double> xs) {
    if (xs.size() < 2)
        throw std::invalid_argument("sample_variance: need at least 2 values");
    const double m = mean(xs);
    double acc = 0.0;
    for (double x : xs) acc += (x - m) * (x - m);
    return acc / static_cast<double>(xs.size() - 1);
}

double sample_stddev(std::span<const double> xs) { return std::sqrt(sample_variance(xs)); }

namespace {

// Lentz's method for the continued fraction of the incomplete beta function.
double betacf(double a, double b, double x) {
    constexpr int kMaxIter = 300;
    constexpr double kEps = 3.0e-16;
    constexpr double kFpMin = 1.0e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < kFpMin) d = kFpMin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::abs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::abs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps) return h;
    }
    throw std::runtime_error("regularized_incomplete_beta: continued fraction did not converge");
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (a <= 0.0 || b <= 0.0)
        throw std::invalid_argument("regularized_incomplete_beta: a, b must be > 0");
    if (x < 0.0 || x > 1.0)
        throw std::invalid_argument("regularized_incomplete_beta: x must be in [0, 1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    const double front = std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                                  a * std::log(x) + b * std::log1p(-x));
    if (x < (a + 1.0) / (a + b + 2.0)) return front * betacf(a, b, x) / a;
    return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

double f_cdf(double f, double df1, double df2) {
    if (df1 <= 0.0 || df2 <= 0.0)
        throw std::invalid_argument("f_cdf: degrees of freedom must be > 0");
    if (f <= 0.0) return 0.0;
    const double x = df1 * f / (df1 * f + df2);
    return regularized_incomplete_beta(0.5 * df1, 0.5 * df2, x);
}

FTestResult f_test_two_tailed(std::span<const double> a, std::span<const double> b) {
    if (a.size() < 2 || b.size() < 2)
        throw std::invalid_argument("f_test_two_tailed: need at least 2 values per sample");
    const double va = sample_variance(a);
    const double vb = sample_variance(b);
    if (va == 0.0 || vb == 0.0)
        throw std::invalid_argument("f_test_two_tailed: zero variance sample");

    FTestResult res;
    res.var_a = va;
    res.var_b = vb;
    double v_num, v_den;
    std::size_t n_num, n_den;
    // Larger variance goes in the numerator; on an exact tie the larger sample
    // wins, so the choice is symmetric in the argument order.
    const bool a_num = (va > vb) || (va == vb && a.size() >= b.size());
    if (a_num) {
        v_num = va;
        v_den = vb;
        n_num = a.size();
        n_den = b.size();
    } else {
        v_num = vb;
        v_den = va;
        n_num = b.size();
        n_den = a.size();
    }
    res.f_statistic = v_num / v_den;
    res.df_num = static_cast<double>(n_num - 1);
    res.df_den = static_cast<double>(n_den - 1);
    const double cdf = f_cdf(res.f_statistic, res.df_num, res.df_den);
    res.p_value = std::min(1.0, 2.0 * std::min(cdf, 1.0 - cdf));
    return res;
}

PointSummary summarize(const std::vector<Vec2>& points) {
    if (points.empty()) throw std::invalid_argument("summarize: empty point list");
    PointSummary s;
    for (const Vec2& p : points) s.centroid += p;
    s.centroid = s.centroid * (1.0 / static_cast<double>(points.size()));
    s.distances.reserve(points.size());
    for (const Vec2& p : points) s.distances.push_back((p - s.centroid).norm());
    s.mean_distance = mean(s.distances);
    // A lone landing has no spread; the n - 1 estimator is undefined there.
    s.distance_std = points.size() < 2 ? 0.0 : sample_stddev(s.distances);
    return s;
}

}  // namespace srnav
