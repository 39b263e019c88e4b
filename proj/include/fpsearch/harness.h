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

#ifndef FPSEARCH_HARNESS_H
#define FPSEARCH_HARNESS_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fpsearch/report.h"

/// Experiment drivers behind the `fpsearch` CLI. Each command returns plain
/// rows; the format_* functions render them. Rows always follow input grid
/// order, whatever order the parallel workers finish in.
namespace fpsearch::harness {

enum class Format { Csv, Json };

Format parse_format(const std::string &name);

/// Rows whose predicted-vs-measured gap exceeds this are flagged.
constexpr double kGapTolerance = 1e-9;

// ---------------------------------------------------------------- compare

struct CompareConfig {
    double f_min = 0.75;
    double f_max = 1.0;
    unsigned f_steps = 11;
    unsigned younes_q = 1;
    unsigned pi3_m = 1;
    std::uint64_t seed = 0;
    std::uint64_t mc_samples = 10'000'000;
};

/// Failure probabilities of each strategy at one marked fraction. The
/// amplitude-amplification column uses younes_q iterations.
struct ComparisonRow {
    double f;
    double classical;
    double younes;
    double aa;
    double pi3;
};

/// Averages of one strategy's failure over f ~ U[f_min, f_max].
struct StrategySummary {
    std::string name;
    double range_min;
    double range_max;
    /// Mean of the failures at the two endpoints of the f range.
    double endpoint_midpoint;
    /// The rounded figure printed in the literature for the default regime
    /// (f in [0.75, 1], one query), when one exists.
    std::optional<std::string> printed;
    /// Exact expectation under the uniform law, by adaptive Simpson.
    double uniform_expectation;
    double monte_carlo;
    double monte_carlo_std_error;
};

struct CompareResult {
    CompareConfig config;
    std::vector<ComparisonRow> rows;
    std::vector<StrategySummary> summary;
};

CompareResult cmd_compare(const CompareConfig &config);
std::string format_compare(const CompareResult &result, Format format);
/// Human-readable averages block.
std::string format_compare_summary(const CompareResult &result);

/// True if `value` (a probability) rounds to `printed` (a percentage such as
/// "3.12%") at the printed precision, allowing half a unit in the last place.
bool consistent_with_printed(double value, const std::string &printed);

// --------------------------------------------------------------- simulate

struct SimulateConfig {
    unsigned n = 4;
    double f = 0.75;
    unsigned m_max = 2;
    std::uint64_t seed = 0;
};

/// Largest register cmd_simulate runs.
constexpr unsigned kMaxSimulateQubits = 20;

struct SimulateRow {
    unsigned m;
    std::uint64_t q_m;
    double predicted;
    double measured;
    bool flagged;

    double gap() const;
};

struct SimulateResult {
    SimulateConfig config;
    /// round(f 2^n) marked states out of 2^n.
    std::uint64_t marked_count;
    double f_actual;
    double epsilon;
    std::vector<SimulateRow> rows;
};

/// U_m built on Walsh-Hadamard with |s> = |0...0> and a seeded random marked
/// set of round(f 2^n) states, for m = 0..m_max.
SimulateResult cmd_simulate(const SimulateConfig &config);
std::string format_simulate(const SimulateResult &result, Format format);

// ---------------------------------------------------------------- analyze

struct AnalyzeConfig {
    /// theta_i = pi i / theta_steps, i = 1..theta_steps.
    unsigned theta_steps = 12;
    /// epsilon_j = j / (eps_steps - 1), j = 0..eps_steps-1.
    unsigned eps_steps = 21;
};

struct AnalyzeRow {
    double theta;
    double epsilon;
    double deviation;
    double linear_coefficient;
};

std::vector<AnalyzeRow> cmd_analyze(const AnalyzeConfig &config);
std::string format_analyze(const std::vector<AnalyzeRow> &rows, Format format);

// --------------------------------------------------------------- ecc-demo

struct EccDemoConfig {
    unsigned eta = 3;
    std::string message = "101";
    std::vector<double> deltas = {0.0, 0.05, 0.1};
    std::vector<unsigned> noisy_qubits = {0};
};

struct EccDemoRow {
    DeviationReport report;
    bool flagged;
};

std::vector<EccDemoRow> cmd_ecc_demo(const EccDemoConfig &config);
std::string format_ecc_demo(const std::vector<EccDemoRow> &rows, Format format);

/// "%.12g".
std::string format_number(double x);

}  // namespace fpsearch::harness

#endif
