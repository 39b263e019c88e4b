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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <json.hpp>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "fpsearch/analytic.h"
#include "fpsearch/baselines.h"
#include "fpsearch/ecc.h"
#include "fpsearch/errors.h"
#include "fpsearch/hilbert.h"
#include "fpsearch/quadrature.h"
#include "fpsearch/recursion.h"

namespace fpsearch::harness {

using nlohmann::json;

namespace {

// Runs body(i) for i in [0, n) across threads and rethrows the first failure.
template <typename Body>
void parallel_for(std::size_t n, Body body) {
    std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); i++) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

// JSON numbers carry the same 12 significant digits as the CSV.
double rounded(double x) {
    return std::stod(format_number(x));
}

std::string json_text(const json &j) {
    return j.dump(2) + "\n";
}

// Shared grid helpers.
std::vector<double> linear_grid(double lo, double hi, unsigned steps) {
    std::vector<double> g(steps);
    for (unsigned i = 0; i < steps; i++) {
        g[i] = steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
    }
    if (steps > 1) {
        g.back() = hi;
    }
    return g;
}

struct Strategy {
    const char *name;
    std::function<double(double)> failure;
    const char *printed;
};

std::vector<Strategy> strategies(const CompareConfig &c) {
    const unsigned q = c.younes_q;
    const unsigned m = c.pi3_m;
    const bool printed_regime = c.f_min == 0.75 && c.f_max == 1.0 && q == 1 && m == 1;
    return {
        {"classical",
         [](double f) {
             return baselines::classical_failure(baselines::MarkedFraction(f));
         },
         printed_regime ? "3.12%" : nullptr},
        {"younes",
         [q](double f) {
             const baselines::MarkedFraction mf(f);
             // The single-query form avoids the 1e-16 residue of the general one at f = 1.
             return std::max(0.0, 1.0 - (q == 1 ? baselines::younes_success_single_query(mf)
                                                : baselines::younes_success(mf, q)));
         },
         printed_regime ? "3.12%" : nullptr},
        {"aa",
         [q](double f) {
             return baselines::amplitude_amplification_failure(1.0 - f, q);
         },
         nullptr},
        {"pi3",
         [m](double f) {
             return analytic::deviation_after_recursion(1.0 - f, m);
         },
         printed_regime ? "0.8%" : nullptr},
    };
}

void validate(const CompareConfig &c) {
    if (!(c.f_min >= 0.0 && c.f_max <= 1.0 && c.f_min <= c.f_max)) {
        throw std::invalid_argument("compare: need 0 <= f-min <= f-max <= 1");
    }
    if (c.f_steps == 0) {
        throw std::invalid_argument("compare: f-steps must be positive");
    }
    if (c.f_steps == 1 && c.f_min != c.f_max) {
        throw std::invalid_argument("compare: a single grid point needs f-min == f-max");
    }
    if (c.younes_q == 0) {
        throw std::invalid_argument("compare: younes-q must be at least 1");
    }
    if (c.pi3_m > analytic::kMaxRecursionLevel) {
        throw std::invalid_argument("compare: pi3-m is beyond the deepest tracked recursion level");
    }
    if (c.mc_samples == 0) {
        throw std::invalid_argument("compare: need at least one Monte Carlo sample");
    }
}

// Monte Carlo means of every strategy over f ~ U[lo, hi]. Samples are drawn in
// fixed-size chunks, each with its own seed_seq{seed, chunk}, so the result is
// independent of the thread count.
void monte_carlo_means(const std::vector<Strategy> &ss, const CompareConfig &c, std::vector<double> &mean,
                       std::vector<double> &std_error) {
    constexpr std::uint64_t kChunk = 1 << 16;
    const std::uint64_t chunks = (c.mc_samples + kChunk - 1) / kChunk;
    const std::size_t k = ss.size();
    std::vector<double> sum(chunks * k, 0.0);
    std::vector<double> sum_sq(chunks * k, 0.0);
    parallel_for(chunks, [&](std::size_t chunk) {
        std::seed_seq seq{static_cast<std::uint32_t>(c.seed), static_cast<std::uint32_t>(c.seed >> 32),
                          static_cast<std::uint32_t>(chunk)};
        std::mt19937_64 rng(seq);
        const std::uint64_t begin = chunk * kChunk;
        const std::uint64_t end = std::min(c.mc_samples, begin + kChunk);
        for (std::uint64_t i = begin; i < end; i++) {
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            const double f = std::min(c.f_max, c.f_min + (c.f_max - c.f_min) * u);
            for (std::size_t s = 0; s < k; s++) {
                const double v = ss[s].failure(f);
                sum[chunk * k + s] += v;
                sum_sq[chunk * k + s] += v * v;
            }
        }
    });
    const double n = static_cast<double>(c.mc_samples);
    mean.assign(k, 0.0);
    std_error.assign(k, 0.0);
    for (std::size_t s = 0; s < k; s++) {
        double total = 0;
        double total_sq = 0;
        for (std::uint64_t chunk = 0; chunk < chunks; chunk++) {
            total += sum[chunk * k + s];
            total_sq += sum_sq[chunk * k + s];
        }
        mean[s] = total / n;
        const double var = std::max(0.0, total_sq / n - mean[s] * mean[s]);
        std_error[s] = std::sqrt(var / n);
    }
}

std::string csv_flag(bool b) {
    return b ? "1" : "0";
}

}  // namespace

std::string format_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

Format parse_format(const std::string &name) {
    if (name == "csv") {
        return Format::Csv;
    }
    if (name == "json") {
        return Format::Json;
    }
    throw std::invalid_argument("unknown output format '" + name + "' (expected csv or json)");
}

// ---------------------------------------------------------------- compare

CompareResult cmd_compare(const CompareConfig &config) {
    validate(config);
    const auto ss = strategies(config);
    const auto grid = linear_grid(config.f_min, config.f_max, config.f_steps);

    CompareResult result{config, std::vector<ComparisonRow>(grid.size()), {}};
    parallel_for(grid.size(), [&](std::size_t i) {
        const double f = grid[i];
        result.rows[i] = {f, ss[0].failure(f), ss[1].failure(f), ss[2].failure(f), ss[3].failure(f)};
    });

    std::vector<double> mc_mean;
    std::vector<double> mc_err;
    monte_carlo_means(ss, config, mc_mean, mc_err);

    const double width = config.f_max - config.f_min;
    for (std::size_t s = 0; s < ss.size(); s++) {
        StrategySummary sum;
        sum.name = ss[s].name;
        const double lo = ss[s].failure(config.f_min);
        const double hi = ss[s].failure(config.f_max);
        sum.endpoint_midpoint = 0.5 * (lo + hi);
        if (ss[s].printed) {
            sum.printed = ss[s].printed;
        }
        sum.range_min = std::min(lo, hi);
        sum.range_max = std::max(lo, hi);
        for (const auto &row : result.rows) {
            const double v = s == 0 ? row.classical : s == 1 ? row.younes : s == 2 ? row.aa : row.pi3;
            sum.range_min = std::min(sum.range_min, v);
            sum.range_max = std::max(sum.range_max, v);
        }
        sum.uniform_expectation =
            width == 0 ? lo : adaptive_simpson(ss[s].failure, config.f_min, config.f_max, 1e-10 * width) / width;
        sum.monte_carlo = mc_mean[s];
        sum.monte_carlo_std_error = mc_err[s];
        result.summary.push_back(std::move(sum));
    }
    return result;
}

std::string format_compare(const CompareResult &result, Format format) {
    if (format == Format::Json) {
        json rows = json::array();
        for (const auto &r : result.rows) {
            rows.push_back({{"f", rounded(r.f)},
                            {"classical", rounded(r.classical)},
                            {"younes_q", rounded(r.younes)},
                            {"aa_q", rounded(r.aa)},
                            {"pi3_m", rounded(r.pi3)}});
        }
        json summary = json::array();
        for (const auto &s : result.summary) {
            json j = {{"strategy", s.name},
                      {"range_min", rounded(s.range_min)},
                      {"range_max", rounded(s.range_max)},
                      {"endpoint_midpoint", rounded(s.endpoint_midpoint)},
                      {"uniform_expectation", rounded(s.uniform_expectation)},
                      {"monte_carlo", rounded(s.monte_carlo)},
                      {"monte_carlo_std_error", rounded(s.monte_carlo_std_error)}};
            j["printed"] = s.printed ? json(*s.printed) : json(nullptr);
            summary.push_back(std::move(j));
        }
        const auto &c = result.config;
        json out = {{"command", "compare"},
                    {"config",
                     {{"f_min", c.f_min},
                      {"f_max", c.f_max},
                      {"f_steps", c.f_steps},
                      {"younes_q", c.younes_q},
                      {"pi3_m", c.pi3_m},
                      {"seed", c.seed},
                      {"mc_samples", c.mc_samples}}},
                    {"rows", std::move(rows)},
                    {"summary", std::move(summary)}};
        return json_text(out);
    }
    std::string out = "f,classical,younes_q,aa_q,pi3_m\n";
    for (const auto &r : result.rows) {
        out += format_number(r.f) + "," + format_number(r.classical) + "," + format_number(r.younes) + "," +
               format_number(r.aa) + "," + format_number(r.pi3) + "\n";
    }
    return out;
}

std::string format_compare_summary(const CompareResult &result) {
    const auto &c = result.config;
    std::ostringstream out;
    auto pct = [](double p) {
        return format_number(100.0 * p) + "%";
    };
    out << "# failure probability, f ~ U[" << format_number(c.f_min) << ", " << format_number(c.f_max)
        << "], younes q=" << c.younes_q << ", aa q=" << c.younes_q << ", pi3 m=" << c.pi3_m << "\n";
    out << "# reported averages (endpoint midpoint)\n";
    for (const auto &s : result.summary) {
        out << "  " << s.name << ": " << pct(s.endpoint_midpoint);
        if (s.printed) {
            out << " (printed " << *s.printed << ", "
                << (consistent_with_printed(s.endpoint_midpoint, *s.printed) ? "consistent" : "INCONSISTENT")
                << ")";
        }
        out << "\n";
    }
    out << "# exact uniform expectation (adaptive Simpson)\n";
    for (const auto &s : result.summary) {
        out << "  " << s.name << ": " << pct(s.uniform_expectation) << "\n";
    }
    out << "# Monte Carlo (" << c.mc_samples << " samples, seed " << c.seed << ")\n";
    for (const auto &s : result.summary) {
        const double sigmas = s.monte_carlo_std_error > 0
                                  ? std::abs(s.monte_carlo - s.uniform_expectation) / s.monte_carlo_std_error
                                  : 0.0;
        out << "  " << s.name << ": " << pct(s.monte_carlo) << " +- " << pct(s.monte_carlo_std_error) << " ("
            << format_number(sigmas) << " sigma from exact)" << (sigmas > 4 ? " FLAGGED" : "") << "\n";
    }
    out << "# failure range over the grid\n";
    for (const auto &s : result.summary) {
        out << "  " << s.name << ": [" << format_number(s.range_min) << ", " << format_number(s.range_max) << "]\n";
    }
    if (!result.summary.empty() && result.summary[0].printed) {
        out << "# note: the printed averages are endpoint midpoints, not uniform expectations;\n"
               "#       the printed pi3 range (0, 0.0016) disagrees with the computed maximum above.\n";
    }
    return out.str();
}

bool consistent_with_printed(double value, const std::string &printed) {
    std::string digits = printed;
    if (!digits.empty() && digits.back() == '%') {
        digits.pop_back();
    }
    const double shown = std::stod(digits);
    const auto dot = digits.find('.');
    const int decimals = dot == std::string::npos ? 0 : static_cast<int>(digits.size() - dot - 1);
    const double half_unit = 0.5 * std::pow(10.0, -decimals);
    return std::abs(100.0 * value - shown) <= half_unit + 1e-12;
}

// --------------------------------------------------------------- simulate

double SimulateRow::gap() const {
    return std::abs(predicted - measured);
}

SimulateResult cmd_simulate(const SimulateConfig &config) {
    if (config.n < 1) {
        throw std::invalid_argument("simulate: n must be at least 1");
    }
    if (config.n > kMaxSimulateQubits) {
        throw ResourceError(
            "simulate: n = " + std::to_string(config.n) + " exceeds the cap of " + std::to_string(kMaxSimulateQubits));
    }
    if (!(config.f >= 0.0 && config.f <= 1.0)) {
        throw std::invalid_argument("simulate: f must lie in [0, 1]");
    }
    if (config.m_max > recursion::kDefaultMaxLevel) {
        throw ResourceError(
            "simulate: m-max = " + std::to_string(config.m_max) + " exceeds the cap of " +
            std::to_string(recursion::kDefaultMaxLevel));
    }
    const unsigned n = config.n;
    const std::uint64_t dim = std::uint64_t{1} << n;
    const auto k = static_cast<std::uint64_t>(std::llround(config.f * static_cast<double>(dim)));

    // Seeded Fisher-Yates with an explicit bounded draw, so the marked set is
    // the same on every standard library.
    std::vector<std::uint64_t> order(dim);
    for (std::uint64_t i = 0; i < dim; i++) {
        order[i] = i;
    }
    std::mt19937_64 rng(config.seed);
    for (std::uint64_t i = dim - 1; i > 0; i--) {
        const std::uint64_t j = rng() % (i + 1);
        std::swap(order[i], order[j]);
    }
    std::vector<std::uint64_t> marked(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
    std::vector<std::uint64_t> unmarked(order.begin() + static_cast<std::ptrdiff_t>(k), order.end());

    const recursion::SearchProblem problem{
        WalshHadamardAll{n},
        hilbert::basis_state(n, 0),
        MarkedSet::from_indices(n, std::move(marked)),
    };
    const MarkedSet complement = MarkedSet::from_indices(n, std::move(unmarked));

    SimulateResult result;
    result.config = config;
    result.marked_count = k;
    result.f_actual = static_cast<double>(k) / static_cast<double>(dim);
    result.epsilon = 1.0 - result.f_actual;
    result.rows.resize(config.m_max + 1);
    parallel_for(result.rows.size(), [&](std::size_t i) {
        const auto m = static_cast<unsigned>(i);
        const StateVector out = recursion::execute(recursion::build_um(m), problem);
        SimulateRow row{m, recursion::query_count(m), analytic::deviation_after_recursion(result.epsilon, m),
                        hilbert::success_probability(out, complement), false};
        row.flagged = row.gap() > kGapTolerance;
        result.rows[i] = row;
    });
    return result;
}

std::string format_simulate(const SimulateResult &result, Format format) {
    if (format == Format::Json) {
        json rows = json::array();
        for (const auto &r : result.rows) {
            rows.push_back({{"m", r.m},
                            {"q_m", r.q_m},
                            {"predicted", rounded(r.predicted)},
                            {"measured", rounded(r.measured)},
                            {"gap", rounded(r.gap())},
                            {"flagged", r.flagged}});
        }
        const auto &c = result.config;
        json out = {{"command", "simulate"},
                    {"config", {{"n", c.n}, {"f", c.f}, {"m_max", c.m_max}, {"seed", c.seed}}},
                    {"marked_count", result.marked_count},
                    {"f_actual", rounded(result.f_actual)},
                    {"epsilon", rounded(result.epsilon)},
                    {"rows", std::move(rows)}};
        return json_text(out);
    }
    std::string out = "m,q_m,predicted,measured,gap,flagged\n";
    for (const auto &r : result.rows) {
        out += std::to_string(r.m) + "," + std::to_string(r.q_m) + "," + format_number(r.predicted) + "," +
               format_number(r.measured) + "," + format_number(r.gap()) + "," + csv_flag(r.flagged) + "\n";
    }
    return out;
}

// ---------------------------------------------------------------- analyze

std::vector<AnalyzeRow> cmd_analyze(const AnalyzeConfig &config) {
    if (config.theta_steps < 1) {
        throw std::invalid_argument("analyze: theta-steps must be positive");
    }
    if (config.eps_steps < 2) {
        throw std::invalid_argument("analyze: eps-steps must be at least 2");
    }
    std::vector<AnalyzeRow> rows;
    rows.reserve(static_cast<std::size_t>(config.theta_steps) * config.eps_steps);
    for (unsigned i = 1; i <= config.theta_steps; i++) {
        const double theta = std::numbers::pi * i / config.theta_steps;
        const double linear = analytic::linear_error_coefficient(theta);
        for (unsigned j = 0; j < config.eps_steps; j++) {
            const double eps = static_cast<double>(j) / (config.eps_steps - 1);
            rows.push_back({theta, eps, analytic::deviation_after_one(eps, theta), linear});
        }
    }
    return rows;
}

std::string format_analyze(const std::vector<AnalyzeRow> &rows, Format format) {
    if (format == Format::Json) {
        json js = json::array();
        for (const auto &r : rows) {
            js.push_back({{"theta", rounded(r.theta)},
                          {"epsilon", rounded(r.epsilon)},
                          {"deviation", rounded(r.deviation)},
                          {"linear_coefficient", rounded(r.linear_coefficient)}});
        }
        return json_text({{"command", "analyze"}, {"rows", std::move(js)}});
    }
    std::string out = "theta,epsilon,deviation,linear_coefficient\n";
    for (const auto &r : rows) {
        out += format_number(r.theta) + "," + format_number(r.epsilon) + "," + format_number(r.deviation) + "," +
               format_number(r.linear_coefficient) + "\n";
    }
    return out;
}

// --------------------------------------------------------------- ecc-demo

std::vector<EccDemoRow> cmd_ecc_demo(const EccDemoConfig &config) {
    const ecc::Message message = ecc::Message::parse(config.message);
    if (message.size() != config.eta) {
        throw std::invalid_argument(
            "ecc-demo: message has " + std::to_string(message.size()) + " bits but eta = " +
            std::to_string(config.eta));
    }
    if (config.eta > ecc::kMaxDataQubits) {
        throw ResourceError(
            "ecc-demo: eta = " + std::to_string(config.eta) + " exceeds the cap of " +
            std::to_string(ecc::kMaxDataQubits));
    }
    std::vector<EccDemoRow> rows;
    for (const auto &r : ecc::sweep_error(config.deltas, message, config.noisy_qubits)) {
        rows.push_back({r, r.gap() > kGapTolerance});
    }
    return rows;
}

std::string format_ecc_demo(const std::vector<EccDemoRow> &rows, Format format) {
    if (format == Format::Json) {
        json js = json::array();
        for (const auto &r : rows) {
            js.push_back({{"delta", rounded(r.report.parameter)},
                          {"epsilon_before", rounded(r.report.epsilon_before)},
                          {"predicted", rounded(r.report.predicted)},
                          {"measured", rounded(r.report.measured)},
                          {"gap", rounded(r.report.gap())},
                          {"flagged", r.flagged}});
        }
        return json_text({{"command", "ecc-demo"}, {"rows", std::move(js)}});
    }
    std::string out = "delta,epsilon_before,predicted,measured,gap,flagged\n";
    for (const auto &r : rows) {
        out += format_number(r.report.parameter) + "," + format_number(r.report.epsilon_before) + "," +
               format_number(r.report.predicted) + "," + format_number(r.report.measured) + "," +
               format_number(r.report.gap()) + "," + csv_flag(r.flagged) + "\n";
    }
    return out;
}

}  // namespace fpsearch::harness
