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

#ifndef FPSEARCH_UNITARY_H
#define FPSEARCH_UNITARY_H

#include <cstdint>
#include <random>
#include <variant>
#include <vector>

#include "fpsearch/state_vector.h"

namespace fpsearch {

/// Hadamard on every qubit of an n-qubit register.
struct WalshHadamardAll {
    unsigned num_qubits;
};

/// Row-major 2^n x 2^n complex matrix checked for unitarity on construction.
class DenseMatrix {
   public:
    /// Throws std::invalid_argument unless M^dagger M = I within tol per entry.
    DenseMatrix(unsigned num_qubits, std::vector<amp> entries, double tol = 1e-10);

    unsigned num_qubits() const {
        return num_qubits_;
    }
    std::uint64_t dim() const {
        return std::uint64_t{1} << num_qubits_;
    }
    const amp &operator()(std::uint64_t row, std::uint64_t col) const {
        return entries_[row * dim() + col];
    }
    std::span<const amp> entries() const {
        return entries_;
    }

   private:
    unsigned num_qubits_;
    std::vector<amp> entries_;
};

/// Modulator, parity generator and channel of the parity-qubit transmission
/// demo, applied in that order. Data bit j lives on qubit j; the parity
/// qubit is qubit `message.size()`.
///
/// The channel rotates qubit j by exp(-i angles[j] X). The adjoint runs the
/// chain backwards with negated angles.
struct EccChannel {
    std::vector<std::uint8_t> message;
    std::vector<double> angles;

    unsigned num_qubits() const {
        return static_cast<unsigned>(message.size() + 1);
    }
};

/// Throws std::invalid_argument unless the message is non-empty and binary and
/// there is one angle per transmitted qubit.
void validate(const EccChannel &channel);

/// The base transformation U.
using UnitarySpec = std::variant<WalshHadamardAll, DenseMatrix, EccChannel>;

unsigned num_qubits(const UnitarySpec &u);

/// Haar-random unitary via Gram-Schmidt on a complex Gaussian matrix.
DenseMatrix random_unitary(unsigned num_qubits, std::mt19937_64 &rng);

/// Normalized state with complex Gaussian amplitudes.
StateVector random_state(unsigned num_qubits, std::mt19937_64 &rng);

}  // namespace fpsearch

#endif
