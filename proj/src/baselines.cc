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

#include "fpsearch/baselines.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fpsearch/hilbert.h"

namespace fpsearch::baselines {

namespace {

bool in_unit_interval(double x) {
    return x >= 0.0 && x <= 1.0;
}

// 53-bit uniform in [0, 1); fixed so that seeded runs match across standard libraries.
double uniform01(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

MarkedFraction::MarkedFraction(double f) : f_(f) {
    if (!in_unit_interval(f)) {
        throw std::invalid_argument("MarkedFraction must lie in [0, 1], got " + std::to_string(f));
    }
}

FractionDistribution::FractionDistribution(double lower, double upper) : lower(lower), upper(upper) {
    if (!(in_unit_interval(lower) && in_unit_interval(upper) && lower <= upper)) {
        throw std::invalid_argument("FractionDistribution needs 0 <= lower <= upper <= 1");
    }
}

double classical_failure(MarkedFraction f) {
    const double miss = 1.0 - f.value();
    return miss * miss;
}

bool classical_sample(MarkedFraction f, std::mt19937_64 &rng) {
    // At f = 1 every pick hits; at f = 0 none does.
    if (uniform01(rng) < f.value()) {
        return true;
    }
    return uniform01(rng) < f.value();
}

MonteCarloEstimate classical_failure_rate(MarkedFraction f, std::uint64_t trials, std::uint64_t seed) {
    if (trials == 0) {
        throw std::invalid_argument("classical_failure_rate: need at least one trial");
    }
    std::mt19937_64 rng(seed);
    std::uint64_t failures = 0;
    for (std::uint64_t i = 0; i < trials; i++) {
        failures += classical_sample(f, rng) ? 0 : 1;
    }
    const double rate = static_cast<double>(failures) / static_cast<double>(trials);
    return {rate, std::sqrt(rate * (1.0 - rate) / static_cast<double>(trials)), trials};
}

double younes_success(MarkedFraction f, unsigned q) {
    if (q < 1) {
        throw std::invalid_argument("younes_success: q must be a positive query count");
    }
    if (f.value() == 0.0) {
        return 0.0;
    }
    const double w = std::acos(1.0 - f.value());
    const double s = std::sin(w);
    const double a = std::sin((q + 1) * w);
    const double b = std::sin(q * w);
    const double value = (1.0 - std::cos(w)) * (a * a + b * b) / (s * s);
    return std::clamp(value, 0.0, 1.0);
}

double younes_success_single_query(MarkedFraction f) {
    const double miss = 1.0 - f.value();
    return f.value() * (1.0 + 4.0 * miss * miss);
}

StateVector grover_step(StateVector state, const recursion::SearchProblem &problem) {
    constexpr double pi = std::numbers::pi;
    state = hilbert::apply_selective_phase(std::move(state), problem.targets, pi);
    state = hilbert::apply_unitary(std::move(state), problem.u, true);
    state = hilbert::apply_phase_along(std::move(state), problem.source, pi);
    state = hilbert::apply_unitary(std::move(state), problem.u, false);
    return state;
}

double amplitude_amplification_failure(double epsilon, unsigned q) {
    if (!in_unit_interval(epsilon)) {
        throw std::invalid_argument("amplitude_amplification_failure: epsilon must lie in [0, 1]");
    }
    const double alpha = std::asin(std::sqrt(1.0 - epsilon));
    const double c = std::cos((2.0 * q + 1.0) * alpha);
    return c * c;
}

}  // namespace fpsearch::baselines
