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

#include <span>
#include <vector>

#include "srnav/geometry.hpp"

namespace srnav {

double mean(std::span<const double> xs);
// Sample variance (n - 1 denominator); throws std::invalid_argument for n < 2.
double sample_variance(std::span<const double> xs);
double sample_stddev(std::span<const double> xs);

// Regularized incomplete beta I_x(a, b) via the Lentz continued fraction.
double regularized_incomplete_beta(double a, double b, double x);

// CDF of the F distribution with (df1, df2) degrees of freedom.
double f_cdf(double f, double df1, double df2);

struct FTestResult {
    double f_statistic = 0.0;  // larger variance / smaller variance, >= 1
    double df_num = 0.0;       // degrees of freedom of the larger-variance sample
    double df_den = 0.0;
    double p_value = 1.0;      // two-tailed, capped at 1
    double var_a = 0.0;
    double var_b = 0.0;
};

// Two-tailed F test for equality of variances. The statistic always puts the
// larger sample variance in the numerator, so the result is symmetric in its
// arguments (bit-identical). Throws std::invalid_argument when either sample
// has fewer than two values or zero variance.
FTestResult f_test_two_tailed(std::span<const double> a, std::span<const double> b);

struct PointSummary {
    Vec2 centroid;
    double mean_distance = 0.0;  // mean Euclidean distance to the centroid
    double distance_std = 0.0;   // sample std of those distances
    std::vector<double> distances;
};

// Dispersion summary of repeated 2-D landings; throws on an empty list. A
// single point yields its own centroid and zero spread.
PointSummary summarize(const std::vector<Vec2>& points);

}  // namespace srnav
