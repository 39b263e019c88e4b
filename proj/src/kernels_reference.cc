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

#include "fpsearch/kernels.h"

namespace fpsearch::kernels::reference {

namespace {
constexpr double kSqrtHalf = 0.70710678118654752440;
}

void hadamard(std::span<amp> a, unsigned qubit) {
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    for (std::uint64_t i = 0; i < a.size(); i++) {
        if (i & bit) {
            continue;
        }
        amp x = a[i];
        amp y = a[i | bit];
        a[i] = (x + y) * kSqrtHalf;
        a[i | bit] = (x - y) * kSqrtHalf;
    }
}

void pauli_x(std::span<amp> a, unsigned qubit) {
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    for (std::uint64_t i = 0; i < a.size(); i++) {
        if (!(i & bit)) {
            std::swap(a[i], a[i | bit]);
        }
    }
}

void rotate_x(std::span<amp> a, unsigned qubit, double delta) {
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    const double c = std::cos(delta);
    const amp s{0, -std::sin(delta)};
    for (std::uint64_t i = 0; i < a.size(); i++) {
        if (i & bit) {
            continue;
        }
        amp x = a[i];
        amp y = a[i | bit];
        a[i] = c * x + s * y;
        a[i | bit] = s * x + c * y;
    }
}

void parity_flip(std::span<amp> a, std::uint64_t control_mask, unsigned target) {
    const std::uint64_t bit = std::uint64_t{1} << target;
    for (std::uint64_t i = 0; i < a.size(); i++) {
        if (!(i & bit) && (std::popcount(i & control_mask) & 1)) {
            std::swap(a[i], a[i | bit]);
        }
    }
}

void phase_indices(std::span<amp> a, std::span<const std::uint64_t> indices, amp factor) {
    for (std::uint64_t k : indices) {
        a[k] *= factor;
    }
}

void phase_predicate(std::span<amp> a, const Predicate &marked, amp factor) {
    for (std::uint64_t i = 0; i < a.size(); i++) {
        if (marked(i)) {
            a[i] *= factor;
        }
    }
}

void dense_apply(std::span<amp> out, std::span<const amp> m, std::span<const amp> in, bool adjoint) {
    const std::uint64_t dim = in.size();
    for (std::uint64_t r = 0; r < dim; r++) {
        amp acc = 0;
        for (std::uint64_t c = 0; c < dim; c++) {
            acc += adjoint ? std::conj(m[c * dim + r]) * in[c] : m[r * dim + c] * in[c];
        }
        out[r] = acc;
    }
}

void axpy(std::span<amp> a, amp scale, std::span<const amp> b) {
    for (std::uint64_t i = 0; i < a.size(); i++) {
        a[i] += scale * b[i];
    }
}

double norm_squared(std::span<const amp> a) {
    double total = 0;
    for (const amp &x : a) {
        total += std::norm(x);
    }
    return total;
}

double probability_indices(std::span<const amp> a, std::span<const std::uint64_t> indices) {
    double total = 0;
    for (std::uint64_t k : indices) {
        total += std::norm(a[k]);
    }
    return total;
}

double probability_predicate(std::span<const amp> a, const Predicate &marked) {
    double total = 0;
    for (std::uint64_t i = 0; i < a.size(); i++) {
        if (marked(i)) {
            total += std::norm(a[i]);
        }
    }
    return total;
}

amp inner_product(std::span<const amp> a, std::span<const amp> b) {
    amp total = 0;
    for (std::uint64_t i = 0; i < a.size(); i++) {
        total += std::conj(a[i]) * b[i];
    }
    return total;
}

}  // namespace fpsearch::kernels::reference
