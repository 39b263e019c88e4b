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

#ifndef FPSEARCH_HILBERT_H
#define FPSEARCH_HILBERT_H

#include <array>
#include <cstdint>
#include <vector>

#include "fpsearch/marked_set.h"
#include "fpsearch/state_vector.h"
#include "fpsearch/unitary.h"

/// Primitive operations on dense states. Every function takes the state by
/// value and returns the transformed state; pass with std::move to work in place.
namespace fpsearch::hilbert {

StateVector basis_state(unsigned num_qubits, std::uint64_t index);

/// Hadamard on every qubit. Self-inverse.
StateVector apply_walsh_hadamard(StateVector state);

/// Multiplies the amplitude of every member of `set` by e^{i theta}.
/// theta = pi is the selective inversion.
StateVector apply_selective_phase(StateVector state, const MarkedSet &set, double theta);

/// Multiplies the component of `state` along the unit vector `direction` by
/// e^{i theta}: psi + (e^{i theta} - 1) <direction|psi> direction.
StateVector apply_phase_along(StateVector state, const StateVector &direction, double theta);

/// U state, or U^dagger state when `adjoint` is set.
StateVector apply_unitary(StateVector state, const UnitarySpec &u, bool adjoint = false);

/// Sum of |a_x|^2 over members of `set`.
double success_probability(const StateVector &state, const MarkedSet &set);

/// Ancilla levels used by the six-level phase kickback register.
constexpr unsigned kAncillaLevels = 6;
/// Qubits used to embed the ancilla; levels 6 and 7 stay empty.
constexpr unsigned kAncillaQubits = 3;

/// (1/sqrt 6) sum_k omega^k |k>, omega = exp(-i pi / 3), embedded in 8 levels.
std::array<amp, 8> kickback_ancilla();

/// Data register tensored with the ancilla (ancilla on the top three qubits)
/// after the membership-controlled cyclic shift |k> -> |k+1 mod 6>.
StateVector phase_kickback_joint(const StateVector &state, const MarkedSet &set);

/// 8x8 reduced density matrix of the ancilla, row-major.
std::array<amp, 64> ancilla_reduced_density(const StateVector &joint, unsigned data_qubits);

/// pi/3 selective phase realized by kickback from the six-level ancilla.
/// Throws std::logic_error if the unused ancilla levels pick up amplitude or
/// the ancilla ends up entangled with the data.
StateVector phase_kickback_via_ancilla(const StateVector &state, const MarkedSet &set);

/// Row-major matrix of U (or U^dagger), built column by column from basis
/// states. Intended for small registers.
std::vector<amp> to_dense(const UnitarySpec &u, bool adjoint = false);

}  // namespace fpsearch::hilbert

#endif
