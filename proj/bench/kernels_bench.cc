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

// Serial reference kernels against their OpenMP counterparts, plus a full
// U_m execution on Walsh-Hadamard.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "fpsearch/hilbert.h"
#include "fpsearch/kernels.h"
#include "fpsearch/recursion.h"

using namespace fpsearch;

namespace {

std::vector<amp> random_amps(unsigned n) {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> g;
    std::vector<amp> a(std::size_t{1} << n);
    for (auto &x : a) {
        x = {g(rng), g(rng)};
    }
    return a;
}

template <void (*Kernel)(std::span<amp>, unsigned)>
void BM_single_qubit(benchmark::State &state) {
    const auto n = static_cast<unsigned>(state.range(0));
    auto a = random_amps(n);
    unsigned q = 0;
    for (auto _ : state) {
        Kernel(a, q);
        q = (q + 1) % n;
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(a.size()));
}

template <void (*Kernel)(std::span<amp>, const kernels::Predicate &, amp)>
void BM_phase(benchmark::State &state) {
    auto a = random_amps(static_cast<unsigned>(state.range(0)));
    const kernels::Predicate odd = [](std::uint64_t x) {
        return (x & 1) != 0;
    };
    const amp w = std::polar(1.0, 1.0);
    for (auto _ : state) {
        Kernel(a, odd, w);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(a.size()));
}

template <double (*Kernel)(std::span<const amp>)>
void BM_norm(benchmark::State &state) {
    const auto a = random_amps(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(Kernel(a));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(a.size()));
}

template <void (*Kernel)(std::span<amp>, std::span<const amp>, std::span<const amp>, bool)>
void BM_dense(benchmark::State &state) {
    const auto n = static_cast<unsigned>(state.range(0));
    const auto m = random_amps(2 * n);
    const auto in = random_amps(n);
    std::vector<amp> out(in.size());
    for (auto _ : state) {
        Kernel(out, m, in, false);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m.size()));
}

void BM_execute_um(benchmark::State &state) {
    const auto n = static_cast<unsigned>(state.range(0));
    const auto m = static_cast<unsigned>(state.range(1));
    const std::uint64_t dim = std::uint64_t{1} << n;
    std::vector<std::uint64_t> marked;
    for (std::uint64_t i = 0; i < dim; i += 4) {
        marked.push_back(i);
    }
    const recursion::SearchProblem problem{WalshHadamardAll{n}, hilbert::basis_state(n, 0),
                                           MarkedSet::from_indices(n, marked)};
    const auto seq = recursion::build_um(m);
    for (auto _ : state) {
        benchmark::DoNotOptimize(recursion::execute(seq, problem));
    }
}

}  // namespace

BENCHMARK(BM_single_qubit<kernels::reference::hadamard>)->Name("hadamard/reference")->DenseRange(12, 20, 4);
BENCHMARK(BM_single_qubit<kernels::omp::hadamard>)->Name("hadamard/omp")->DenseRange(12, 20, 4);
BENCHMARK(BM_phase<kernels::reference::phase_predicate>)->Name("phase/reference")->DenseRange(12, 20, 4);
BENCHMARK(BM_phase<kernels::omp::phase_predicate>)->Name("phase/omp")->DenseRange(12, 20, 4);
BENCHMARK(BM_norm<kernels::reference::norm_squared>)->Name("norm/reference")->DenseRange(12, 20, 4);
BENCHMARK(BM_norm<kernels::omp::norm_squared>)->Name("norm/omp")->DenseRange(12, 20, 4);
BENCHMARK(BM_dense<kernels::reference::dense_apply>)->Name("dense/reference")->DenseRange(6, 10, 2);
BENCHMARK(BM_dense<kernels::omp::dense_apply>)->Name("dense/omp")->DenseRange(6, 10, 2);
BENCHMARK(BM_execute_um)->Args({12, 2})->Args({16, 3})->Args({18, 4});

BENCHMARK_MAIN();
