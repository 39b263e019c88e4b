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

// fpsearch: command-line driver for the pi/3 fixed-point search experiments.
//
//   fpsearch compare  --f-min 0.75 --f-max 1 --f-steps 11 --younes-q 1 --pi3-m 1
//   fpsearch simulate --n 4 --f 0.75 --m-max 2
//   fpsearch analyze  --theta-steps 12 --eps-steps 21
//   fpsearch ecc-demo --eta 3 --message 101 --delta 0,0.05,0.1
//
// Every subcommand takes --out <path>, --format csv|json and --seed <u64>.
// Tables go to --out (stdout by default); the compare summary goes to stderr.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>

#include "fpsearch/errors.h"
#include "fpsearch/harness.h"

namespace {

struct CommonOptions {
    std::string out;
    std::string format = "csv";
    std::uint64_t seed = 0;
};

void add_common(CLI::App *cmd, CommonOptions &opts) {
    cmd->add_option("--out", opts.out, "Output path (default: stdout)");
    cmd->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--seed", opts.seed, "Random seed");
}

void emit(const CommonOptions &opts, const std::string &text) {
    if (opts.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opts.out, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot open output file '" + opts.out + "'");
    }
    f << text;
}

}  // namespace

int main(int argc, char **argv) {
    using namespace fpsearch::harness;

    CLI::App app{"Fixed-point (pi/3) quantum search experiments"};
    app.require_subcommand(1);

    CommonOptions compare_opts;
    CompareConfig compare_cfg;
    auto *compare = app.add_subcommand("compare", "Failure probability of classical, Younes, AA and pi/3 search");
    add_common(compare, compare_opts);
    compare->add_option("--f-min", compare_cfg.f_min, "Lowest marked fraction");
    compare->add_option("--f-max", compare_cfg.f_max, "Highest marked fraction");
    compare->add_option("--f-steps", compare_cfg.f_steps, "Grid points over [f-min, f-max]");
    compare->add_option("--younes-q", compare_cfg.younes_q, "Queries for the Younes and AA columns");
    compare->add_option("--pi3-m", compare_cfg.pi3_m, "Recursion level for the pi/3 column");
    compare->add_option("--mc-samples", compare_cfg.mc_samples, "Monte Carlo samples for the averages");

    CommonOptions simulate_opts;
    SimulateConfig simulate_cfg;
    auto *simulate = app.add_subcommand("simulate", "State-vector run of U_m on Walsh-Hadamard");
    add_common(simulate, simulate_opts);
    simulate->add_option("--n", simulate_cfg.n, "Qubits");
    simulate->add_option("--f", simulate_cfg.f, "Marked fraction (rounded to k / 2^n)");
    simulate->add_option("--m-max", simulate_cfg.m_max, "Deepest recursion level");

    CommonOptions analyze_opts;
    AnalyzeConfig analyze_cfg;
    auto *analyze = app.add_subcommand("analyze", "Closed-form residual over a (theta, epsilon) grid");
    add_common(analyze, analyze_opts);
    analyze->add_option("--theta-steps", analyze_cfg.theta_steps, "theta = pi i / steps, i = 1..steps");
    analyze->add_option("--eps-steps", analyze_cfg.eps_steps, "epsilon grid points over [0, 1]");

    CommonOptions ecc_opts;
    EccDemoConfig ecc_cfg;
    auto *ecc = app.add_subcommand("ecc-demo", "Parity-qubit channel correction sweep");
    add_common(ecc, ecc_opts);
    auto *eta_opt = ecc->add_option("--eta", ecc_cfg.eta, "Data qubits");
    auto *message_opt = ecc->add_option("--message", ecc_cfg.message, "Message bits, data qubit 0 first");
    ecc->add_option("--delta", ecc_cfg.deltas, "Channel over-rotation angles (radians)")->delimiter(',');
    ecc->add_option("--qubits", ecc_cfg.noisy_qubits, "Qubits carrying the over-rotation")->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        if (*compare) {
            compare_cfg.seed = compare_opts.seed;
            const auto result = cmd_compare(compare_cfg);
            emit(compare_opts, format_compare(result, parse_format(compare_opts.format)));
            std::cerr << format_compare_summary(result);
        } else if (*simulate) {
            simulate_cfg.seed = simulate_opts.seed;
            emit(simulate_opts, format_simulate(cmd_simulate(simulate_cfg), parse_format(simulate_opts.format)));
        } else if (*analyze) {
            emit(analyze_opts, format_analyze(cmd_analyze(analyze_cfg), parse_format(analyze_opts.format)));
        } else if (*ecc) {
            if (message_opt->count() == 0 && eta_opt->count() > 0) {
                ecc_cfg.message = std::string(ecc_cfg.eta, '0');
                ecc_cfg.message[0] = '1';
            } else if (message_opt->count() > 0 && eta_opt->count() == 0) {
                ecc_cfg.eta = static_cast<unsigned>(ecc_cfg.message.size());
            }
            emit(ecc_opts, format_ecc_demo(cmd_ecc_demo(ecc_cfg), parse_format(ecc_opts.format)));
        }
    } catch (const std::invalid_argument &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const fpsearch::ResourceError &e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
