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

#ifndef FPSEARCH_KERNELS_H
#define FPSEARCH_KERNELS_H

// Amplitude-array kernels. `reference` is a plain serial implementation kept
// as the test oracle; `omp` partitions the same loops across OpenMP threads.
// Both namespaces expose identical signatures.
//
// Bit convention: qubit k flips bit (1 << k) of the basis index.

#include <cstdint>
#include <functional>
#include <span>

#include "fpsearch/state_vector.h"

namespace fpsearch::kernels {

using Predicate = std::function<bool(std::uint64_t)>;

namespace reference {

void hadamard(std::span<amp> a, unsigned qubit);
void pauli_x(std::span<amp> a, unsigned qubit);
/// exp(-i delta X) on one qubit.
void rotate_x(std::span<amp> a, unsigned qubit, double delta);
/// Flips `target` on every basis state whose bits under `control_mask` have odd parity.
void parity_flip(std::span<amp> a, std::uint64_t control_mask, unsigned target);
void phase_indices(std::span<amp> a, std::span<const std::uint64_t> indices, amp factor);
void phase_predicate(std::span<amp> a, const Predicate &marked, amp factor);
/// out = M in, or M^dagger in. M is row-major dim x dim.
void dense_apply(std::span<amp> out, std::span<const amp> m, std::span<const amp> in, bool adjoint);
/// a += scale * b.
void axpy(std::span<amp> a, amp scale, std::span<const amp> b);
double norm_squared(std::span<const amp> a);
double probability_indices(std::span<const amp> a, std::span<const std::uint64_t> indices);
double probability_predicate(std::span<const amp> a, const Predicate &marked);
/// sum conj(a_i) b_i.
amp inner_product(std::span<const amp> a, std::span<const amp> b);

}  // namespace reference

namespace omp {

/// Arrays shorter than this run serially inside the OpenMP kernels.
constexpr std::uint64_t kParallelThreshold = std::uint64_t{1} << 12;
/// Reductions sum fixed-size blocks, then combine the block sums in order, so
/// results do not depend on the thread count.
constexpr std::uint64_t kReductionBlock = 4096;

void hadamard(std::span<amp> a, unsigned qubit);
void pauli_x(std::span<amp> a, unsigned qubit);
void rotate_x(std::span<amp> a, unsigned qubit, double delta);
void parity_flip(std::span<amp> a, std::uint64_t control_mask, unsigned target);
void phase_indices(std::span<amp> a, std::span<const std::uint64_t> indices, amp factor);
void phase_predicate(std::span<amp> a, const Predicate &marked, amp factor);
void dense_apply(std::span<amp> out, std::span<const amp> m, std::span<const amp> in, bool adjoint);
void axpy(std::span<amp> a, amp scale, std::span<const amp> b);
double norm_squared(std::span<const amp> a);
double probability_indices(std::span<const amp> a, std::span<const std::uint64_t> indices);
double probability_predicate(std::span<const amp> a, const Predicate &marked);
amp inner_product(std::span<const amp> a, std::span<const amp> b);

}  // namespace omp

}  // namespace fpsearch::kernels

#endif
