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

#include "fpsearch/harness.h"

#include <gtest/gtest.h>
#include <omp.h>

#include <cmath>
#include <numbers>

#include "fpsearch/errors.h"
#include <json.hpp>

using namespace fpsearch;
using namespace fpsearch::harness;
using nlohmann::json;

namespace {

// Exact averages over eps = 1 - f ~ U[0, 1/4] from the closed-form polynomials
// in eps of each failure probability.
double poly_mean(std::initializer_list<double> coeffs) {
    // coeffs[k] multiplies eps^k; integrate over [0, 1/4] and divide by 1/4.
    double total = 0;
    int k = 0;
    for (double c : coeffs) {
        total += c * std::pow(0.25, k + 1) / (k + 1);
        k++;
    }
    return total / 0.25;
}

CompareConfig quick_compare() {
    CompareConfig c;
    c.mc_samples = 200'000;
    return c;
}

}  // namespace

TEST(harness, compare_rows) {
    const auto r = cmd_compare(quick_compare());
    ASSERT_EQ(r.rows.size(), 11u);
    const auto &row = r.rows.front();
    EXPECT_DOUBLE_EQ(row.f, 0.75);
    EXPECT_NEAR(row.classical, 0.0625, 1e-12);
    EXPECT_NEAR(row.younes, 0.0625, 1e-12);
    EXPECT_NEAR(row.pi3, 0.015625, 1e-12);
    EXPECT_NEAR(row.aa, 1.0, 1e-12);  // overshoot
    const auto &last = r.rows.back();
    EXPECT_EQ(last.f, 1.0);
    EXPECT_EQ(last.classical, 0.0);
    EXPECT_EQ(last.pi3, 0.0);
    EXPECT_NEAR(last.aa, 0.0, 1e-12);
    EXPECT_NEAR(r.rows[5].f, 0.875, 1e-15);
}

TEST(harness, compare_csv_header) {
    const auto text = format_compare(cmd_compare(quick_compare()), Format::Csv);
    EXPECT_EQ(text.substr(0, text.find('\n')), "f,classical,younes_q,aa_q,pi3_m");
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 12);
}

TEST(harness, exact_averages) {
    const auto r = cmd_compare(quick_compare());
    ASSERT_EQ(r.summary.size(), 4u);
    EXPECT_EQ(r.summary[0].name, "classical");
    EXPECT_EQ(r.summary[3].name, "pi3");
    EXPECT_NEAR(r.summary[0].uniform_expectation, poly_mean({0, 0, 1}), 1e-9);
    EXPECT_NEAR(r.summary[1].uniform_expectation, poly_mean({0, 1, -4, 4}), 1e-9);
    EXPECT_NEAR(r.summary[2].uniform_expectation, poly_mean({0, 9, -24, 16}), 1e-9);
    EXPECT_NEAR(r.summary[3].uniform_expectation, poly_mean({0, 0, 0, 1}), 1e-9);
    EXPECT_NEAR(r.summary[0].uniform_expectation, 0.0208333, 1e-6);
    EXPECT_NEAR(r.summary[1].uniform_expectation, 0.0572917, 1e-6);
    EXPECT_NEAR(r.summary[3].uniform_expectation, 0.00390625, 1e-9);
    EXPECT_NEAR(r.summary[2].uniform_expectation, 0.6875, 1e-9);
}

TEST(harness, monte_carlo_averages_agree) {
    CompareConfig c;
    c.mc_samples = 10'000'000;
    c.f_steps = 2;
    const auto r = cmd_compare(c);
    for (const auto &s : r.summary) {
        EXPECT_GT(s.monte_carlo_std_error, 0.0) << s.name;
        EXPECT_LT(std::abs(s.monte_carlo - s.uniform_expectation), 4 * s.monte_carlo_std_error) << s.name;
    }
}

TEST(harness, printed_figures) {
    const auto r = cmd_compare(quick_compare());
    EXPECT_DOUBLE_EQ(r.summary[0].endpoint_midpoint, 0.03125);
    EXPECT_DOUBLE_EQ(r.summary[1].endpoint_midpoint, 0.03125);
    EXPECT_DOUBLE_EQ(r.summary[3].endpoint_midpoint, 0.0078125);
    ASSERT_TRUE(r.summary[0].printed && r.summary[1].printed && r.summary[3].printed);
    EXPECT_FALSE(r.summary[2].printed);
    EXPECT_EQ(*r.summary[3].printed, "0.8%");
    for (std::size_t s : {0u, 1u, 3u}) {
        EXPECT_TRUE(consistent_with_printed(r.summary[s].endpoint_midpoint, *r.summary[s].printed));
        EXPECT_FALSE(consistent_with_printed(r.summary[s].uniform_expectation, *r.summary[s].printed));
    }
    EXPECT_NEAR(r.summary[3].range_max, 0.015625, 1e-15);
    CompareConfig other = quick_compare();
    other.pi3_m = 2;
    EXPECT_FALSE(cmd_compare(other).summary[3].printed);
}

TEST(harness, consistent_with_printed_rounding) {
    EXPECT_TRUE(consistent_with_printed(0.0312, "3.12%"));
    EXPECT_TRUE(consistent_with_printed(0.03125, "3.12%"));
    EXPECT_FALSE(consistent_with_printed(0.0314, "3.12%"));
    EXPECT_TRUE(consistent_with_printed(0.0084, "0.8%"));
    EXPECT_FALSE(consistent_with_printed(0.0039, "0.8%"));
}

TEST(harness, summary_text_mentions_both_averages) {
    const auto text = format_compare_summary(cmd_compare(quick_compare()));
    EXPECT_NE(text.find("classical"), std::string::npos);
    EXPECT_NE(text.find("endpoint"), std::string::npos);
}

TEST(harness, simulate_examples) {
    SimulateConfig c;
    c.n = 4;
    c.f = 0.75;
    c.m_max = 3;
    const auto r = cmd_simulate(c);
    EXPECT_EQ(r.marked_count, 12u);
    ASSERT_EQ(r.rows.size(), 4u);
    for (const auto &row : r.rows) {
        EXPECT_NEAR(row.measured, std::pow(0.25, std::pow(3, row.m)), 1e-12);
        EXPECT_FALSE(row.flagged);
    }
    EXPECT_EQ(r.rows[3].q_m, 13u);
    EXPECT_NEAR(r.rows[0].measured, 0.25, 1e-15);

    c.f = 1.0;
    c.m_max = 1;
    EXPECT_NEAR(cmd_simulate(c).rows[1].measured, 0.0, 1e-15);
}

TEST(harness, simulate_rounds_fraction_to_grid) {
    SimulateConfig c;
    c.n = 3;
    c.f = 0.9;
    c.m_max = 1;
    const auto r = cmd_simulate(c);
    EXPECT_EQ(r.marked_count, 7u);
    EXPECT_DOUBLE_EQ(r.f_actual, 0.875);
    EXPECT_NEAR(r.rows[1].measured, std::pow(0.125, 3), 1e-12);
}

TEST(harness, simulate_json_fields) {
    const auto j = json::parse(format_simulate(cmd_simulate({}), Format::Json));
    EXPECT_EQ(j["command"], "simulate");
    ASSERT_EQ(j["rows"].size(), 3u);
    EXPECT_EQ(j["rows"][2]["q_m"], 4);
    EXPECT_EQ(j["rows"][2]["flagged"], false);
}

TEST(harness, analyze_rows) {
    const auto rows = cmd_analyze({3, 5});
    ASSERT_EQ(rows.size(), 15u);
    // theta = pi/3 row block.
    for (int j = 0; j < 5; j++) {
        const auto &r = rows[j];
        EXPECT_NEAR(r.theta, std::numbers::pi / 3, 1e-15);
        EXPECT_NEAR(r.linear_coefficient, 0.0, 1e-15);
        EXPECT_NEAR(r.deviation, std::pow(r.epsilon, 3), 1e-15);
    }
    EXPECT_NEAR(rows[14].theta, std::numbers::pi, 1e-15);
    EXPECT_NEAR(rows[14].linear_coefficient, 9.0, 1e-12);
    EXPECT_NEAR(rows[12].deviation, 0.5 * 1.0 * 1.0, 1e-12);  // eps = 1/2 at theta = pi: eps (3 - 4 eps)^2
    EXPECT_EQ(format_analyze(rows, Format::Csv).substr(0, 42), "theta,epsilon,deviation,linear_coefficient");
}

TEST(harness, ecc_demo_rows) {
    const auto rows = cmd_ecc_demo({});
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0].report.measured, 0.0);
    EXPECT_NEAR(rows[1].report.measured, 1.56e-8, 1e-10);
    EXPECT_NEAR(rows[2].report.epsilon_before, 9.966e-3, 1e-6);
    EXPECT_NEAR(rows[2].report.measured, 9.9e-7, 1e-9);
    for (const auto &r : rows) {
        EXPECT_FALSE(r.flagged);
    }
}

TEST(harness, ecc_demo_flags_double_errors) {
    EccDemoConfig c;
    c.noisy_qubits = {0, 2};
    c.deltas = {0.1};
    EXPECT_TRUE(cmd_ecc_demo(c)[0].flagged);
}

TEST(harness, ecc_demo_validation) {
    EccDemoConfig c;
    c.eta = 4;
    EXPECT_THROW(cmd_ecc_demo(c), std::invalid_argument);
    c.eta = 13;
    c.message = std::string(13, '0');
    EXPECT_THROW(cmd_ecc_demo(c), ResourceError);
}

TEST(harness, output_is_byte_identical_across_runs_and_threads) {
    const int saved = omp_get_max_threads();
    CompareConfig cc = quick_compare();
    SimulateConfig sc;
    sc.n = 10;
    sc.m_max = 3;
    std::string first;
    for (int threads : {1, 4, 1}) {
        omp_set_num_threads(threads);
        std::string text = format_compare(cmd_compare(cc), Format::Json) +
                           format_simulate(cmd_simulate(sc), Format::Csv) +
                           format_ecc_demo(cmd_ecc_demo({}), Format::Csv) +
                           format_analyze(cmd_analyze({}), Format::Csv);
        if (first.empty()) {
            first = text;
        } else {
            EXPECT_EQ(text, first) << "threads=" << threads;
        }
    }
    omp_set_num_threads(saved);
}

TEST(harness, seed_changes_monte_carlo_only) {
    CompareConfig a = quick_compare();
    CompareConfig b = a;
    b.seed = 99;
    const auto ra = cmd_compare(a);
    const auto rb = cmd_compare(b);
    EXPECT_EQ(format_compare(ra, Format::Csv), format_compare(rb, Format::Csv));
    EXPECT_NE(ra.summary[0].monte_carlo, rb.summary[0].monte_carlo);
}

TEST(harness, json_mirrors_csv) {
    const auto r = cmd_compare(quick_compare());
    const auto j = json::parse(format_compare(r, Format::Json));
    ASSERT_EQ(j["rows"].size(), r.rows.size());
    for (std::size_t i = 0; i < r.rows.size(); i++) {
        EXPECT_EQ(j["rows"][i]["f"].get<double>(), std::stod(format_number(r.rows[i].f)));
        EXPECT_EQ(j["rows"][i]["pi3_m"].get<double>(), std::stod(format_number(r.rows[i].pi3)));
    }
    EXPECT_EQ(j["summary"][3]["printed"], "0.8%");
    EXPECT_TRUE(j["summary"][2]["printed"].is_null());

    const auto e = json::parse(format_ecc_demo(cmd_ecc_demo({}), Format::Json));
    EXPECT_EQ(e["rows"][2]["delta"].get<double>(), 0.1);
}

TEST(harness, invalid_inputs) {
    CompareConfig c;
    c.f_min = 0.9;
    c.f_max = 0.8;
    EXPECT_THROW(cmd_compare(c), std::invalid_argument);
    c = CompareConfig{};
    c.f_steps = 0;
    EXPECT_THROW(cmd_compare(c), std::invalid_argument);
    c = CompareConfig{};
    c.younes_q = 0;
    EXPECT_THROW(cmd_compare(c), std::invalid_argument);
    EXPECT_THROW(parse_format("xml"), std::invalid_argument);
    EXPECT_THROW(cmd_analyze({0, 5}), std::invalid_argument);

    SimulateConfig s;
    s.n = 21;
    EXPECT_THROW(cmd_simulate(s), ResourceError);
    s.n = 4;
    s.m_max = 13;
    EXPECT_THROW(cmd_simulate(s), ResourceError);
    s.m_max = 1;
    s.f = 1.5;
    EXPECT_THROW(cmd_simulate(s), std::invalid_argument);
}

TEST(harness, format_number_precision) {
    EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333");
    EXPECT_EQ(format_number(0.0625), "0.0625");
    EXPECT_EQ(format_number(0.0), "0");
}
