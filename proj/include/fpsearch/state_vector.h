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

#ifndef FPSEARCH_STATE_VECTOR_H
#define FPSEARCH_STATE_VECTOR_H

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace fpsearch {

using amp = std::complex<double>;

/// Largest register the dense simulator will allocate (2^26 amplitudes, 1 GiB).
constexpr unsigned kMaxQubits = 26;

/// Dense pure state over 2^n computational basis states.
///
/// Qubit 0 is the least significant bit of the basis index.
class StateVector {
   public:
    /// All-zero amplitudes except index 0, i.e. |0...0>.
    explicit StateVector(unsigned num_qubits);
    StateVector(unsigned num_qubits, std::vector<amp> amplitudes);

    unsigned num_qubits() const {
        return num_qubits_;
    }
    std::uint64_t size() const {
        return amplitudes_.size();
    }

    std::span<amp> amplitudes() {
        return amplitudes_;
    }
    std::span<const amp> amplitudes() const {
        return amplitudes_;
    }

    amp &operator[](std::uint64_t index) {
        return amplitudes_[index];
    }
    const amp &operator[](std::uint64_t index) const {
        return amplitudes_[index];
    }

    double norm_squared() const;
    /// <this|other>.
    amp inner_product(const StateVector &other) const;
    /// Divides by the norm. Throws if the state is zero.
    void normalize();

    bool operator==(const StateVector &other) const = default;

   private:
    unsigned num_qubits_;
    std::vector<amp> amplitudes_;
};

/// Largest |a_i - b_i| over all amplitudes. Sizes must agree.
double max_abs_difference(const StateVector &a, const StateVector &b);

/// True if there is a unit complex c with max|a - c*b| < tol. c is estimated
/// from the largest-magnitude amplitude of b.
bool equal_up_to_global_phase(const StateVector &a, const StateVector &b, double tol);

}  // namespace fpsearch

#endif
