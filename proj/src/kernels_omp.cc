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

#include <algorithm>
#include <bit>
#include <cmath>
#include <utility>
#include <cstdint>
#include <vector>

#include "fpsearch/kernels.h"

// Pair kernels iterate over the 2^(n-1) indices with the target bit cleared:
// for pair number p, the low index is obtained by inserting a zero bit at
// position `qubit`. This keeps every iteration independent.

namespace fpsearch::kernels::omp {

namespace {

constexpr double kSqrtHalf = 0.70710678118654752440;

inline std::uint64_t insert_zero_bit(std::uint64_t p, std::uint64_t bit) {
    const std::uint64_t low = p & (bit - 1);
    return ((p - low) << 1) | low;
}

inline std::int64_t as_signed(std::uint64_t n) {
    return static_cast<std::int64_t>(n);
}

template <typename BlockSum>
double blocked_sum(std::uint64_t n, BlockSum block_sum) {
    const std::uint64_t num_blocks = (n + kReductionBlock - 1) / kReductionBlock;
    std::vector<double> partial(num_blocks, 0.0);
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
    for (std::int64_t b = 0; b < as_signed(num_blocks); b++) {
        const std::uint64_t begin = static_cast<std::uint64_t>(b) * kReductionBlock;
        const std::uint64_t end = std::min(n, begin + kReductionBlock);
        partial[b] = block_sum(begin, end);
    }
    double total = 0;
    for (double p : partial) {
        total += p;
    }
    return total;
}

}  // namespace

void hadamard(std::span<amp> a, unsigned qubit) {
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    const std::uint64_t pairs = a.size() / 2;
#pragma omp parallel for schedule(static) if (a.size() >= kParallelThreshold)
    for (std::int64_t p = 0; p < as_signed(pairs); p++) {
        const std::uint64_t i = insert_zero_bit(static_cast<std::uint64_t>(p), bit);
        amp x = a[i];
        amp y = a[i | bit];
        a[i] = (x + y) * kSqrtHalf;
        a[i | bit] = (x - y) * kSqrtHalf;
    }
}

void pauli_x(std::span<amp> a, unsigned qubit) {
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    const std::uint64_t pairs = a.size() / 2;
#pragma omp parallel for schedule(static) if (a.size() >= kParallelThreshold)
    for (std::int64_t p = 0; p < as_signed(pairs); p++) {
        const std::uint64_t i = insert_zero_bit(static_cast<std::uint64_t>(p), bit);
        std::swap(a[i], a[i | bit]);
    }
}

void rotate_x(std::span<amp> a, unsigned qubit, double delta) {
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    const std::uint64_t pairs = a.size() / 2;
    const double c = std::cos(delta);
    const amp s{0, -std::sin(delta)};
#pragma omp parallel for schedule(static) if (a.size() >= kParallelThreshold)
    for (std::int64_t p = 0; p < as_signed(pairs); p++) {
        const std::uint64_t i = insert_zero_bit(static_cast<std::uint64_t>(p), bit);
        amp x = a[i];
        amp y = a[i | bit];
        a[i] = c * x + s * y;
        a[i | bit] = s * x + c * y;
    }
}

void parity_flip(std::span<amp> a, std::uint64_t control_mask, unsigned target) {
    const std::uint64_t bit = std::uint64_t{1} << target;
    const std::uint64_t pairs = a.size() / 2;
#pragma omp parallel for schedule(static) if (a.size() >= kParallelThreshold)
    for (std::int64_t p = 0; p < as_signed(pairs); p++) {
        const std::uint64_t i = insert_zero_bit(static_cast<std::uint64_t>(p), bit);
        if (std::popcount(i & control_mask) & 1) {
            std::swap(a[i], a[i | bit]);
        }
    }
}

void phase_indices(std::span<amp> a, std::span<const std::uint64_t> indices, amp factor) {
#pragma omp parallel for schedule(static) if (indices.size() >= kParallelThreshold)
    for (std::int64_t k = 0; k < as_signed(indices.size()); k++) {
        a[indices[k]] *= factor;
    }
}

void phase_predicate(std::span<amp> a, const Predicate &marked, amp factor) {
#pragma omp parallel for schedule(static) if (a.size() >= kParallelThreshold)
    for (std::int64_t i = 0; i < as_signed(a.size()); i++) {
        if (marked(static_cast<std::uint64_t>(i))) {
            a[i] *= factor;
        }
    }
}

void dense_apply(std::span<amp> out, std::span<const amp> m, std::span<const amp> in, bool adjoint) {
    const std::uint64_t dim = in.size();
    // The matrix has dim^2 entries; parallelize once that is large.
#pragma omp parallel for schedule(static) if (dim * dim >= kParallelThreshold)
    for (std::int64_t r = 0; r < as_signed(dim); r++) {
        amp acc = 0;
        if (adjoint) {
            for (std::uint64_t c = 0; c < dim; c++) {
                acc += std::conj(m[c * dim + r]) * in[c];
            }
        } else {
            const amp *row = m.data() + r * dim;
            for (std::uint64_t c = 0; c < dim; c++) {
                acc += row[c] * in[c];
            }
        }
        out[r] = acc;
    }
}

void axpy(std::span<amp> a, amp scale, std::span<const amp> b) {
#pragma omp parallel for schedule(static) if (a.size() >= kParallelThreshold)
    for (std::int64_t i = 0; i < as_signed(a.size()); i++) {
        a[i] += scale * b[i];
    }
}

double norm_squared(std::span<const amp> a) {
    return blocked_sum(a.size(), [&](std::uint64_t begin, std::uint64_t end) {
        double s = 0;
        for (std::uint64_t i = begin; i < end; i++) {
            s += std::norm(a[i]);
        }
        return s;
    });
}

double probability_indices(std::span<const amp> a, std::span<const std::uint64_t> indices) {
    return blocked_sum(indices.size(), [&](std::uint64_t begin, std::uint64_t end) {
        double s = 0;
        for (std::uint64_t k = begin; k < end; k++) {
            s += std::norm(a[indices[k]]);
        }
        return s;
    });
}

double probability_predicate(std::span<const amp> a, const Predicate &marked) {
    return blocked_sum(a.size(), [&](std::uint64_t begin, std::uint64_t end) {
        double s = 0;
        for (std::uint64_t i = begin; i < end; i++) {
            if (marked(i)) {
                s += std::norm(a[i]);
            }
        }
        return s;
    });
}

amp inner_product(std::span<const amp> a, std::span<const amp> b) {
    double re = blocked_sum(a.size(), [&](std::uint64_t begin, std::uint64_t end) {
        double s = 0;
        for (std::uint64_t i = begin; i < end; i++) {
            s += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        }
        return s;
    });
    double im = blocked_sum(a.size(), [&](std::uint64_t begin, std::uint64_t end) {
        double s = 0;
        for (std::uint64_t i = begin; i < end; i++) {
            s += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
        }
        return s;
    });
    return {re, im};
}

}  // namespace fpsearch::kernels::omp
