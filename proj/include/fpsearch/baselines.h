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

#ifndef FPSEARCH_BASELINES_H
#define FPSEARCH_BASELINES_H

#include <cstdint>
#include <random>

#include "fpsearch/recursion.h"
#include "fpsearch/state_vector.h"

/// Reference strategies: classical two-pick search, the Younes et al.
/// success formula, and standard amplitude amplification.
namespace fpsearch::baselines {

/// Fraction of marked states, validated to lie in [0, 1].
class MarkedFraction {
   public:
    explicit MarkedFraction(double f);
    double value() const {
        return f_;
    }

   private:
    double f_;
};

/// Uniform law over [lower, upper].
struct FractionDistribution {
    double lower;
    double upper;

    FractionDistribution(double lower, double upper);
    double width() const {
        return upper - lower;
    }
};

/// (1 - f)^2: both random picks miss.
double classical_failure(MarkedFraction f);

/// One realization of the two-pick strategy; true on success.
bool classical_sample(MarkedFraction f, std::mt19937_64 &rng);

struct MonteCarloEstimate {
    double rate;
    double std_error;
    std::uint64_t trials;
};

/// Empirical failure rate of classical_sample over `trials` runs.
MonteCarloEstimate classical_failure_rate(MarkedFraction f, std::uint64_t trials, std::uint64_t seed);

/// (1 - cos w)(sin^2((q+1)w) + sin^2(q w)) / sin^2 w with w = arccos(1 - f),
/// clamped to [0, 1]. f = 0 gives 0. q must be at least 1.
double younes_success(MarkedFraction f, unsigned q);

/// f (1 + 4 (1 - f)^2), the q = 1 specialization.
double younes_success_single_query(MarkedFraction f);

/// One amplitude-amplification iteration on a state already of the form U|psi>:
/// target inversion, U^dagger, source inversion, U.
StateVector grover_step(StateVector state, const recursion::SearchProblem &problem);

/// cos^2((2q + 1) asin(sqrt(1 - epsilon))): failure after U and q iterations.
double amplitude_amplification_failure(double epsilon, unsigned q);

}  // namespace fpsearch::baselines

#endif
