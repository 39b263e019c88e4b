// Copyright 2026 The fpsearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FPSEARCH_ANALYTIC_H
#define FPSEARCH_ANALYTIC_H

#include <complex>
#include <cstdint>
#include <numbers>

/// Closed-form residual probabilities of the composite step U R_s U^dagger R_t U
/// and of its recursion.
namespace fpsearch::analytic {

/// The fixed-point phase shift.
constexpr double kPiOver3 = std::numbers::pi / 3.0;

/// Deepest recursion level whose failure exponent 3^m is tracked; deeper levels
/// report 0 for any epsilon < 1.
constexpr unsigned kMaxRecursionLevel = 40;

/// Inputs of the single-step analysis. Throws if epsilon is outside [0, 1].
struct DeviationInputs {
    double epsilon;
    double theta = kPiOver3;

    DeviationInputs(double epsilon, double theta = kPiOver3);
};

/// The composite step maps |s> to coeff_us U|s> + coeff_t |t>.
struct SuperpositionCoefficients {
    std::complex<double> coeff_us;
    std::complex<double> coeff_t;
    std::complex<double> u_ts;
};

/// coeff_us = e^{i theta} + |u_ts|^2 (e^{i theta} - 1)^2, coeff_t = u_ts (e^{i theta} - 1).
SuperpositionCoefficients superposition_after_one(std::complex<double> u_ts, double theta = kPiOver3);

/// epsilon |e^{i theta} + (1 - epsilon)(e^{i theta} - 1)^2|^2, the probability of
/// missing the target after one composite step. Equals epsilon^3 at theta = pi/3.
///
/// Evaluated in the cancellation-free form
///   epsilon (2 cos theta - 1 + 4 epsilon sin^2(theta / 2))^2,
/// with 2 cos theta - 1 written as a product of sines vanishing at theta = pi/3.
double deviation_after_one(double epsilon, double theta = kPiOver3);
double deviation_after_one(const DeviationInputs &in);

/// epsilon^(3^m): failure of U_m started from |s>. Computed in log space for
/// m > 8 and flushed to 0 below 1e-300.
double deviation_after_recursion(double epsilon, unsigned m);

/// epsilon^(2q + 1) for the query counts q = (3^m - 1) / 2 the recursion
/// produces. Other q raise std::invalid_argument naming the nearest valid counts.
double failure_vs_queries(double epsilon, std::uint64_t queries);

/// |1 - e^{i theta} + e^{2 i theta}|^2, the coefficient of the O(epsilon) term
/// of deviation_after_one. Zero exactly at theta = +-pi/3 (mod 2 pi).
double linear_error_coefficient(double theta);

}  // namespace fpsearch::analytic

#endif
