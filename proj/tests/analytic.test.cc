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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fpsearch/hilbert.h"
#include "fpsearch/recursion.h"
#include "test_util.h"

using namespace fpsearch;
namespace ft = fpsearch::testing;
using namespace fpsearch::analytic;

constexpr double kPi = std::numbers::pi;

namespace {

// Residual exactly as the complex expression is written, with no algebraic
// rearrangement: epsilon |e^{i theta} + (1 - epsilon)(e^{i theta} - 1)^2|^2.
double literal_residual(double eps, double theta) {
    const std::complex<double> e = std::exp(std::complex<double>(0, theta));
    return eps * std::norm(e + (1.0 - eps) * (e - 1.0) * (e - 1.0));
}

}  // namespace

TEST(analytic, superposition_examples) {
    const auto e = std::exp(std::complex<double>(0, kPiOver3));
    auto c = superposition_after_one(1.0);
    EXPECT_LT(std::abs(c.coeff_us - (e + (e - 1.0) * (e - 1.0))), 1e-15);
    EXPECT_LT(std::abs(c.coeff_t - (e - 1.0)), 1e-15);

    auto z = superposition_after_one(0.0, 1.7);
    EXPECT_LT(std::abs(z.coeff_us - std::exp(std::complex<double>(0, 1.7))), 1e-15);
    EXPECT_EQ(z.coeff_t, std::complex<double>(0));
    EXPECT_THROW(superposition_after_one(1.5), std::invalid_argument);
}

// The composite step on a single basis target reproduces
// coeff_us U|s> + coeff_t |t> amplitude by amplitude.
TEST(analytic, superposition_matches_simulation_single_target) {
    std::mt19937_64 rng(31);
    for (unsigned n = 1; n <= 5; n++) {
        for (double theta : {kPiOver3, kPi, 0.77}) {
            const DenseMatrix u = random_unitary(n, rng);
            const std::uint64_t t = rng() % u.dim();
            const auto s = hilbert::basis_state(n, 0);
            const recursion::SearchProblem problem{u, s, MarkedSet::from_indices(n, {t})};
            const auto out = recursion::execute(recursion::build_um(1), problem, theta);

            const auto coeffs = superposition_after_one(u(t, 0), theta);
            const auto us = hilbert::apply_unitary(s, u);
            auto expected = us;
            for (std::uint64_t i = 0; i < expected.size(); i++) {
                expected[i] *= coeffs.coeff_us;
            }
            expected[t] += coeffs.coeff_t;
            EXPECT_LT(max_abs_difference(out, expected), 1e-12) << "n=" << n << " theta=" << theta;
        }
    }
}

// For a target subspace, |t> is the normalized marked component of U|s> and
// u_ts its (real) length.
TEST(analytic, superposition_matches_simulation_target_subspace) {
    std::mt19937_64 rng(37);
    for (unsigned n = 2; n <= 5; n++) {
        const DenseMatrix u = random_unitary(n, rng);
        const auto targets = ft::random_marked_set(n, 1 + rng() % (u.dim() - 1), rng);
        const auto s = hilbert::basis_state(n, 0);
        const auto us = hilbert::apply_unitary(s, u);
        StateVector t(n);
        t[0] = 0;
        for (std::uint64_t i = 0; i < us.size(); i++) {
            if (targets.contains(i)) {
                t[i] = us[i];
            }
        }
        const double u_ts = std::sqrt(t.norm_squared());
        t.normalize();

        const auto out = recursion::execute(recursion::build_um(1), {u, s, targets});
        const auto coeffs = superposition_after_one(u_ts);
        for (std::uint64_t i = 0; i < out.size(); i++) {
            const auto expected = coeffs.coeff_us * us[i] + coeffs.coeff_t * t[i];
            EXPECT_LT(std::abs(out[i] - expected), 1e-12);
        }
        EXPECT_NEAR(1.0 - hilbert::success_probability(out, targets), deviation_after_one(1.0 - u_ts * u_ts),
                    1e-12);
    }
}

TEST(analytic, deviation_after_one_examples) {
    EXPECT_EQ(deviation_after_one(0.0, kPiOver3), 0.0);
    EXPECT_NEAR(deviation_after_one(0.25, kPiOver3), 0.015625, 1e-16);
    EXPECT_NEAR(deviation_after_one(0.25, kPi), 1.0, 1e-15);
    EXPECT_NEAR(deviation_after_one(1.0, kPiOver3), 1.0, 1e-15);
    EXPECT_NEAR(deviation_after_one(DeviationInputs(0.5)), 0.125, 1e-16);
    EXPECT_THROW(deviation_after_one(-0.1), std::invalid_argument);
    EXPECT_THROW(deviation_after_one(1.1), std::invalid_argument);
    EXPECT_THROW(DeviationInputs(std::nan("")), std::invalid_argument);
}

TEST(analytic, cubic_law_to_machine_precision) {
    for (int i = 0; i <= 10000; i++) {
        const double eps = i / 10000.0;
        ASSERT_LE(std::abs(deviation_after_one(eps) - eps * eps * eps), 1e-15) << eps;
    }
}

TEST(analytic, matches_literal_complex_expression) {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (int i = 0; i < 2000; i++) {
        const double eps = unit(rng);
        const double theta = angle(rng);
        const double got = deviation_after_one(eps, theta);
        EXPECT_NEAR(got, literal_residual(eps, theta), 1e-13);
        EXPECT_GE(got, 0.0);
        EXPECT_LE(got, 1.0);
    }
}

TEST(analytic, pi_shift_is_amplitude_amplification_overshoot) {
    for (int i = 0; i <= 100; i++) {
        const double eps = i / 100.0;
        const double expected = eps * (3 - 4 * eps) * (3 - 4 * eps);
        EXPECT_NEAR(deviation_after_one(eps, kPi), expected, 1e-14);
    }
}

TEST(analytic, pi_over_3_step_always_improves) {
    EXPECT_EQ(deviation_after_one(0.0), 0.0);
    EXPECT_NEAR(deviation_after_one(1.0), 1.0, 1e-15);
    for (int i = 1; i < 1000; i++) {
        const double eps = i / 1000.0;
        EXPECT_LT(deviation_after_one(eps), eps);
    }
}

// Brute force: random dense U and single basis targets on up to five qubits.
TEST(analytic, cubic_law_matches_state_vector_simulation) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 40; trial++) {
        const unsigned n = 1 + trial % 5;
        const DenseMatrix u = random_unitary(n, rng);
        const std::uint64_t t = rng() % u.dim();
        const auto targets = MarkedSet::from_indices(n, {t});
        const double eps = 1.0 - std::norm(u(t, 0));
        const auto out = recursion::execute(recursion::build_um(1), {u, hilbert::basis_state(n, 0), targets});
        EXPECT_NEAR(1.0 - hilbert::success_probability(out, targets), deviation_after_one(eps), 1e-10);
    }
}

TEST(analytic, deviation_after_recursion_examples) {
    EXPECT_DOUBLE_EQ(deviation_after_recursion(0.1, 0), 0.1);
    EXPECT_NEAR(deviation_after_recursion(0.1, 2), 1e-9, 1e-24);
    EXPECT_EQ(deviation_after_recursion(0.0, 5), 0.0);
    EXPECT_EQ(deviation_after_recursion(1.0, 100), 1.0);
    EXPECT_EQ(deviation_after_recursion(0.1, 10), 0.0);
    EXPECT_EQ(deviation_after_recursion(0.999999, 41), 0.0);
    // Log-space branch above m = 8 stays accurate where the value is representable.
    EXPECT_NEAR(deviation_after_recursion(0.9999, 9) / std::pow(0.9999, 19683.0), 1.0, 1e-12);
}

TEST(analytic, recursion_is_iterated_cubing) {
    for (double eps : {0.05, 0.3, 0.5, 0.9, 0.99, 0.999, 0.99999}) {
        for (unsigned m = 0; m < 12; m++) {
            const double next = deviation_after_recursion(eps, m + 1);
            const double iterated = deviation_after_one(deviation_after_recursion(eps, m));
            if (next == 0.0) {
                EXPECT_LT(iterated, 1e-290);
                continue;
            }
            EXPECT_NEAR(iterated / next, 1.0, 1e-12) << "eps=" << eps << " m=" << m;
        }
    }
}

TEST(analytic, failure_vs_queries) {
    EXPECT_DOUBLE_EQ(failure_vs_queries(0.3, 0), 0.3);
    EXPECT_NEAR(failure_vs_queries(0.1, 4), 1e-9, 1e-24);
    EXPECT_NEAR(failure_vs_queries(0.25, 1), 0.015625, 1e-17);
    for (unsigned m = 0; m <= 6; m++) {
        const auto q = recursion::query_count(m);
        EXPECT_EQ(failure_vs_queries(0.7, q), deviation_after_recursion(0.7, m));
        EXPECT_NEAR(failure_vs_queries(0.7, q), std::pow(0.7, 2.0 * q + 1), 1e-14);
    }
    try {
        failure_vs_queries(0.5, 2);
        FAIL() << "expected a domain error";
    } catch (const std::invalid_argument &e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find(" 1 "), std::string::npos) << msg;
        EXPECT_NE(msg.find(" 4"), std::string::npos) << msg;
    }
    EXPECT_THROW(failure_vs_queries(0.5, 5), std::invalid_argument);
}

TEST(analytic, linear_error_coefficient) {
    EXPECT_NEAR(linear_error_coefficient(kPiOver3), 0.0, 1e-30);
    EXPECT_NEAR(linear_error_coefficient(-kPiOver3), 0.0, 1e-30);
    EXPECT_NEAR(linear_error_coefficient(kPi), 9.0, 1e-14);
    EXPECT_NEAR(linear_error_coefficient(0.0), 1.0, 1e-15);
    for (int i = 0; i < 200; i++) {
        const double theta = -kPi + 2 * kPi * i / 200.0;
        const auto e = std::exp(std::complex<double>(0, theta));
        EXPECT_NEAR(linear_error_coefficient(theta), std::norm(1.0 - e + e * e), 1e-13);
    }
}

TEST(analytic, linear_coefficient_vanishes_only_at_pi_over_3) {
    const int steps = 10000;
    const double h = 2 * kPi / steps;
    int argmin_pos = -1;
    int argmin_neg = -1;
    for (int i = 0; i < steps; i++) {
        const double theta = -kPi + h * (i + 1);
        const double v = linear_error_coefficient(theta);
        const bool local_min = v <= linear_error_coefficient(theta - h) && v <= linear_error_coefficient(theta + h);
        if (local_min) {
            (theta > 0 ? argmin_pos : argmin_neg) = i;
            EXPECT_LT(std::abs(std::abs(theta) - kPiOver3), h) << theta;
        }
    }
    EXPECT_GE(argmin_pos, 0);
    EXPECT_GE(argmin_neg, 0);
}
