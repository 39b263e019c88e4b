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

#include "fpsearch/hilbert.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fpsearch/errors.h"
#include "fpsearch/kernels.h"

namespace fpsearch::hilbert {

namespace k = kernels::omp;

namespace {

void require_same_width(unsigned a, unsigned b, const char *op) {
    if (a != b) {
        throw std::invalid_argument(
            std::string(op) + ": qubit-count mismatch (" + std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

struct UnitaryApplier {
    StateVector &state;
    bool adjoint;

    void operator()(const WalshHadamardAll &w) const {
        require_same_width(w.num_qubits, state.num_qubits(), "apply_unitary");
        for (unsigned q = 0; q < w.num_qubits; q++) {
            k::hadamard(state.amplitudes(), q);
        }
    }

    void operator()(const DenseMatrix &m) const {
        require_same_width(m.num_qubits(), state.num_qubits(), "apply_unitary");
        std::vector<amp> out(state.size());
        k::dense_apply(out, m.entries(), state.amplitudes(), adjoint);
        state = StateVector(state.num_qubits(), std::move(out));
    }

    void operator()(const EccChannel &c) const {
        validate(c);
        require_same_width(c.num_qubits(), state.num_qubits(), "apply_unitary");
        const unsigned eta = static_cast<unsigned>(c.message.size());
        const std::uint64_t data_mask = (std::uint64_t{1} << eta) - 1;
        auto a = state.amplitudes();
        auto modulate = [&] {
            for (unsigned q = 0; q < eta; q++) {
                if (c.message[q]) {
                    k::pauli_x(a, q);
                }
            }
        };
        auto transmit = [&](double sign) {
            for (unsigned q = 0; q <= eta; q++) {
                if (c.angles[q] != 0) {
                    k::rotate_x(a, q, sign * c.angles[q]);
                }
            }
        };
        if (!adjoint) {
            modulate();
            k::parity_flip(a, data_mask, eta);
            transmit(+1);
        } else {
            transmit(-1);
            k::parity_flip(a, data_mask, eta);
            modulate();
        }
    }
};

}  // namespace

StateVector basis_state(unsigned num_qubits, std::uint64_t index) {
    if (num_qubits < 1 || num_qubits > kMaxQubits || index >= (std::uint64_t{1} << num_qubits)) {
        throw std::invalid_argument(
            "basis_state: index " + std::to_string(index) + " out of range for " + std::to_string(num_qubits) +
            " qubits");
    }
    StateVector s(num_qubits);
    s[0] = 0;
    s[index] = 1;
    return s;
}

StateVector apply_walsh_hadamard(StateVector state) {
    const WalshHadamardAll w{state.num_qubits()};
    return apply_unitary(std::move(state), w);
}

StateVector apply_selective_phase(StateVector state, const MarkedSet &set, double theta) {
    require_same_width(set.num_qubits(), state.num_qubits(), "apply_selective_phase");
    const amp factor = std::polar(1.0, theta);
    if (set.is_explicit()) {
        k::phase_indices(state.amplitudes(), set.members(), factor);
    } else {
        k::phase_predicate(state.amplitudes(), set.predicate(), factor);
    }
    return state;
}

StateVector apply_phase_along(StateVector state, const StateVector &direction, double theta) {
    require_same_width(direction.num_qubits(), state.num_qubits(), "apply_phase_along");
    const amp overlap = direction.inner_product(state);
    k::axpy(state.amplitudes(), (std::polar(1.0, theta) - 1.0) * overlap, direction.amplitudes());
    return state;
}

StateVector apply_unitary(StateVector state, const UnitarySpec &u, bool adjoint) {
    std::visit(UnitaryApplier{state, adjoint}, u);
    return state;
}

double success_probability(const StateVector &state, const MarkedSet &set) {
    require_same_width(set.num_qubits(), state.num_qubits(), "success_probability");
    if (set.is_explicit()) {
        return k::probability_indices(state.amplitudes(), set.members());
    }
    return k::probability_predicate(state.amplitudes(), set.predicate());
}

std::array<amp, 8> kickback_ancilla() {
    std::array<amp, 8> anc{};
    const double scale = 1.0 / std::sqrt(static_cast<double>(kAncillaLevels));
    for (unsigned level = 0; level < kAncillaLevels; level++) {
        anc[level] = std::polar(scale, -std::numbers::pi * level / 3.0);
    }
    return anc;
}

StateVector phase_kickback_joint(const StateVector &state, const MarkedSet &set) {
    require_same_width(set.num_qubits(), state.num_qubits(), "phase_kickback_via_ancilla");
    const unsigned n = state.num_qubits();
    if (n + kAncillaQubits > kMaxQubits) {
        throw ResourceError("phase_kickback_via_ancilla: register plus ancilla exceeds the qubit cap");
    }
    const std::uint64_t dim = state.size();
    const auto anc = kickback_ancilla();
    std::vector<amp> joint(dim << kAncillaQubits, amp{0});
    for (std::uint64_t level = 0; level < 8; level++) {
        for (std::uint64_t x = 0; x < dim; x++) {
            joint[(level << n) | x] = state[x] * anc[level];
        }
    }
    // Membership-controlled cyclic shift of the ancilla. The shift is a
    // permutation of the six occupied levels within each marked column.
    for (std::uint64_t x = 0; x < dim; x++) {
        if (!set.contains(x)) {
            continue;
        }
        amp carry = joint[((kAncillaLevels - 1) << n) | x];
        for (std::uint64_t level = kAncillaLevels - 1; level > 0; level--) {
            joint[(level << n) | x] = joint[((level - 1) << n) | x];
        }
        joint[x] = carry;
    }
    return StateVector(n + kAncillaQubits, std::move(joint));
}

std::array<amp, 64> ancilla_reduced_density(const StateVector &joint, unsigned data_qubits) {
    const std::uint64_t dim = std::uint64_t{1} << data_qubits;
    if (joint.num_qubits() != data_qubits + kAncillaQubits) {
        throw std::invalid_argument("ancilla_reduced_density: joint register has the wrong width");
    }
    std::array<amp, 64> rho{};
    for (std::uint64_t r = 0; r < 8; r++) {
        for (std::uint64_t c = 0; c < 8; c++) {
            amp acc = 0;
            for (std::uint64_t x = 0; x < dim; x++) {
                acc += joint[(r << data_qubits) | x] * std::conj(joint[(c << data_qubits) | x]);
            }
            rho[r * 8 + c] = acc;
        }
    }
    return rho;
}

StateVector phase_kickback_via_ancilla(const StateVector &state, const MarkedSet &set) {
    const unsigned n = state.num_qubits();
    const std::uint64_t dim = state.size();
    StateVector joint = phase_kickback_joint(state, set);
    for (std::uint64_t level = kAncillaLevels; level < 8; level++) {
        for (std::uint64_t x = 0; x < dim; x++) {
            if (joint[(level << n) | x] != amp{0}) {
                throw std::logic_error("phase_kickback_via_ancilla: unused ancilla level populated");
            }
        }
    }
    // Contract the ancilla against its initial state; the ancilla is an
    // eigenvector of the shift, so the remainder must vanish.
    const auto anc = kickback_ancilla();
    std::vector<amp> data(dim, amp{0});
    for (std::uint64_t level = 0; level < kAncillaLevels; level++) {
        for (std::uint64_t x = 0; x < dim; x++) {
            data[x] += std::conj(anc[level]) * joint[(level << n) | x];
        }
    }
    double residual = 0;
    for (std::uint64_t level = 0; level < kAncillaLevels; level++) {
        for (std::uint64_t x = 0; x < dim; x++) {
            residual = std::max(residual, std::abs(joint[(level << n) | x] - data[x] * anc[level]));
        }
    }
    if (residual > 1e-12) {
        throw std::logic_error("phase_kickback_via_ancilla: ancilla left entangled with the data register");
    }
    return StateVector(n, std::move(data));
}

std::vector<amp> to_dense(const UnitarySpec &u, bool adjoint) {
    const unsigned n = num_qubits(u);
    if (n > 12) {
        throw ResourceError("to_dense: register too wide for a dense matrix");
    }
    const std::uint64_t dim = std::uint64_t{1} << n;
    std::vector<amp> m(dim * dim);
    for (std::uint64_t c = 0; c < dim; c++) {
        StateVector col = apply_unitary(basis_state(n, c), u, adjoint);
        for (std::uint64_t r = 0; r < dim; r++) {
            m[r * dim + c] = col[r];
        }
    }
    return m;
}

}  // namespace fpsearch::hilbert
