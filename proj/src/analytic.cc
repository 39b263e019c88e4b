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

#include "fpsearch/analytic.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fpsearch::analytic {

namespace {

void check_probability(double epsilon, const char *op) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
        throw std::invalid_argument(std::string(op) + ": epsilon must lie in [0, 1], got " + std::to_string(epsilon));
    }
}

// 2 cos(theta) - 1 = 2 (cos theta - cos pi/3) = -4 sin((theta + pi/3)/2) sin((theta - pi/3)/2).
double linear_term(double theta) {
    return -4.0 * std::sin((theta + kPiOver3) / 2.0) * std::sin((theta - kPiOver3) / 2.0);
}

}  // namespace

DeviationInputs::DeviationInputs(double epsilon, double theta) : epsilon(epsilon), theta(theta) {
    check_probability(epsilon, "DeviationInputs");
}

SuperpositionCoefficients superposition_after_one(std::complex<double> u_ts, double theta) {
    if (std::abs(u_ts) > 1.0 + 1e-12) {
        throw std::invalid_argument("superposition_after_one: |u_ts| must not exceed 1");
    }
    const std::complex<double> e = std::polar(1.0, theta);
    const std::complex<double> d = e - 1.0;
    return {e + std::norm(u_ts) * d * d, u_ts * d, u_ts};
}

double deviation_after_one(double epsilon, double theta) {
    check_probability(epsilon, "deviation_after_one");
    const double half = std::sin(theta / 2.0);
    const double inner = linear_term(theta) + 4.0 * epsilon * half * half;
    return std::clamp(epsilon * inner * inner, 0.0, 1.0);
}

double deviation_after_one(const DeviationInputs &in) {
    return deviation_after_one(in.epsilon, in.theta);
}

double deviation_after_recursion(double epsilon, unsigned m) {
    check_probability(epsilon, "deviation_after_recursion");
    if (epsilon == 0.0 || epsilon == 1.0) {
        return epsilon;
    }
    if (m > kMaxRecursionLevel) {
        return 0.0;
    }
    const double exponent = std::pow(3.0, static_cast<double>(m));
    double result = m > 8 ? std::exp(exponent * std::log(epsilon)) : std::pow(epsilon, exponent);
    return result < 1e-300 ? 0.0 : result;
}

double failure_vs_queries(double epsilon, std::uint64_t queries) {
    std::uint64_t q = 0;
    for (unsigned m = 0; m <= kMaxRecursionLevel; m++) {
        if (q == queries) {
            return deviation_after_recursion(epsilon, m);
        }
        std::uint64_t next = 3 * q + 1;
        if (queries < next) {
            throw std::invalid_argument(
                "failure_vs_queries: " + std::to_string(queries) +
                " is not a recursion query count (3^m - 1)/2; nearest valid counts are " + std::to_string(q) +
                " and " + std::to_string(next));
        }
        q = next;
    }
    throw std::invalid_argument(
        "failure_vs_queries: " + std::to_string(queries) + " exceeds the deepest tracked recursion level");
}

double linear_error_coefficient(double theta) {
    const double l = linear_term(theta);
    return l * l;
}

}  // namespace fpsearch::analytic
