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

#include "fpsearch/state_vector.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fpsearch/errors.h"
#include "fpsearch/kernels.h"

namespace fpsearch {

namespace {

void check_width(unsigned num_qubits) {
    if (num_qubits < 1) {
        throw std::invalid_argument("StateVector needs at least one qubit");
    }
    if (num_qubits > kMaxQubits) {
        throw ResourceError(
            "StateVector of " + std::to_string(num_qubits) + " qubits exceeds the cap of " +
            std::to_string(kMaxQubits));
    }
}

}  // namespace

StateVector::StateVector(unsigned num_qubits) : num_qubits_(num_qubits) {
    check_width(num_qubits);
    amplitudes_.assign(std::size_t{1} << num_qubits, amp{0});
    amplitudes_[0] = 1;
}

StateVector::StateVector(unsigned num_qubits, std::vector<amp> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    check_width(num_qubits);
    if (amplitudes_.size() != (std::size_t{1} << num_qubits)) {
        throw std::invalid_argument(
            "StateVector of " + std::to_string(num_qubits) + " qubits needs " +
            std::to_string(std::size_t{1} << num_qubits) + " amplitudes, got " +
            std::to_string(amplitudes_.size()));
    }
}

double StateVector::norm_squared() const {
    return kernels::omp::norm_squared(amplitudes_);
}

amp StateVector::inner_product(const StateVector &other) const {
    if (other.size() != size()) {
        throw std::invalid_argument("inner_product: dimension mismatch");
    }
    return kernels::omp::inner_product(amplitudes_, other.amplitudes_);
}

void StateVector::normalize() {
    double n = std::sqrt(norm_squared());
    if (n == 0) {
        throw std::invalid_argument("cannot normalize the zero vector");
    }
    for (amp &a : amplitudes_) {
        a /= n;
    }
}

double max_abs_difference(const StateVector &a, const StateVector &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("max_abs_difference: dimension mismatch");
    }
    double worst = 0;
    for (std::uint64_t i = 0; i < a.size(); i++) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

bool equal_up_to_global_phase(const StateVector &a, const StateVector &b, double tol) {
    if (a.size() != b.size()) {
        return false;
    }
    std::uint64_t pivot = 0;
    for (std::uint64_t i = 1; i < b.size(); i++) {
        if (std::abs(b[i]) > std::abs(b[pivot])) {
            pivot = i;
        }
    }
    if (std::abs(b[pivot]) == 0) {
        return max_abs_difference(a, b) < tol;
    }
    amp c = a[pivot] / b[pivot];
    if (std::abs(c) == 0) {
        return false;
    }
    c /= std::abs(c);
    double worst = 0;
    for (std::uint64_t i = 0; i < a.size(); i++) {
        worst = std::max(worst, std::abs(a[i] - c * b[i]));
    }
    return worst < tol;
}

}  // namespace fpsearch
