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

#include "fpsearch/unitary.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fpsearch/errors.h"

namespace fpsearch {

DenseMatrix::DenseMatrix(unsigned num_qubits, std::vector<amp> entries, double tol)
    : num_qubits_(num_qubits), entries_(std::move(entries)) {
    if (num_qubits < 1 || num_qubits > 12) {
        throw std::invalid_argument("DenseMatrix supports 1..12 qubits");
    }
    const std::uint64_t d = dim();
    if (entries_.size() != d * d) {
        throw std::invalid_argument(
            "DenseMatrix needs " + std::to_string(d * d) + " entries, got " + std::to_string(entries_.size()));
    }
    // (M^dagger M)_{ij} = sum_k conj(M_ki) M_kj
    for (std::uint64_t i = 0; i < d; i++) {
        for (std::uint64_t j = i; j < d; j++) {
            amp acc = 0;
            for (std::uint64_t k = 0; k < d; k++) {
                acc += std::conj(entries_[k * d + i]) * entries_[k * d + j];
            }
            amp expected = i == j ? 1.0 : 0.0;
            if (std::abs(acc - expected) > tol) {
                throw std::invalid_argument(
                    "DenseMatrix is not unitary: (M^dagger M)[" + std::to_string(i) + "," + std::to_string(j) +
                    "] deviates by " + std::to_string(std::abs(acc - expected)));
            }
        }
    }
}

void validate(const EccChannel &channel) {
    if (channel.message.empty()) {
        throw std::invalid_argument("EccChannel: message must carry at least one bit");
    }
    for (auto b : channel.message) {
        if (b > 1) {
            throw std::invalid_argument("EccChannel: message bits must be 0 or 1");
        }
    }
    if (channel.angles.size() != channel.message.size() + 1) {
        throw std::invalid_argument(
            "EccChannel: expected " + std::to_string(channel.message.size() + 1) + " channel angles, got " +
            std::to_string(channel.angles.size()));
    }
    if (channel.num_qubits() > kMaxQubits) {
        throw ResourceError("EccChannel: register too wide");
    }
}

unsigned num_qubits(const UnitarySpec &u) {
    struct Visitor {
        unsigned operator()(const WalshHadamardAll &w) const {
            return w.num_qubits;
        }
        unsigned operator()(const DenseMatrix &m) const {
            return m.num_qubits();
        }
        unsigned operator()(const EccChannel &c) const {
            return c.num_qubits();
        }
    };
    return std::visit(Visitor{}, u);
}

DenseMatrix random_unitary(unsigned num_qubits, std::mt19937_64 &rng) {
    const std::uint64_t d = std::uint64_t{1} << num_qubits;
    std::normal_distribution<double> gauss;
    // Columns stored contiguously while orthonormalizing.
    std::vector<amp> cols(d * d);
    for (auto &x : cols) {
        double re = gauss(rng);
        double im = gauss(rng);
        x = {re, im};
    }
    for (std::uint64_t j = 0; j < d; j++) {
        amp *cj = &cols[j * d];
        // Two passes of modified Gram-Schmidt keep the result unitary to ~1e-15.
        for (int pass = 0; pass < 2; pass++) {
            for (std::uint64_t k = 0; k < j; k++) {
                const amp *ck = &cols[k * d];
                amp proj = 0;
                for (std::uint64_t r = 0; r < d; r++) {
                    proj += std::conj(ck[r]) * cj[r];
                }
                for (std::uint64_t r = 0; r < d; r++) {
                    cj[r] -= proj * ck[r];
                }
            }
        }
        double n = 0;
        for (std::uint64_t r = 0; r < d; r++) {
            n += std::norm(cj[r]);
        }
        n = std::sqrt(n);
        for (std::uint64_t r = 0; r < d; r++) {
            cj[r] /= n;
        }
    }
    std::vector<amp> rows(d * d);
    for (std::uint64_t r = 0; r < d; r++) {
        for (std::uint64_t c = 0; c < d; c++) {
            rows[r * d + c] = cols[c * d + r];
        }
    }
    return DenseMatrix(num_qubits, std::move(rows));
}

StateVector random_state(unsigned num_qubits, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    std::vector<amp> a(std::size_t{1} << num_qubits);
    for (auto &x : a) {
        double re = gauss(rng);
        double im = gauss(rng);
        x = {re, im};
    }
    StateVector s(num_qubits, std::move(a));
    s.normalize();
    return s;
}

}  // namespace fpsearch
