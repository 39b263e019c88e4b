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

#ifndef FPSEARCH_ECC_H
#define FPSEARCH_ECC_H

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "fpsearch/marked_set.h"
#include "fpsearch/report.h"
#include "fpsearch/state_vector.h"
#include "fpsearch/unitary.h"

// Classical bits sent over a noisy quantum channel with one parity qubit.
//
// Register layout: data bit j on qubit j (j < eta), parity qubit on qubit eta.
// Kets are written with qubit 0 first, e.g. |1010> is data 101, parity 0.
namespace fpsearch::ecc {

/// Widest message run_protocol accepts (2^13 amplitudes).
constexpr unsigned kMaxDataQubits = 12;

class Message {
   public:
    explicit Message(std::vector<std::uint8_t> bits);
    /// Characters '0' / '1', first character is data qubit 0.
    static Message parse(std::string_view bits);

    unsigned size() const {
        return static_cast<unsigned>(bits_.size());
    }
    std::span<const std::uint8_t> bits() const {
        return bits_;
    }
    std::uint8_t parity() const;
    /// Basis index of the noiseless codeword (data bits plus parity).
    std::uint64_t codeword() const;

   private:
    std::vector<std::uint8_t> bits_;
};

/// Systematic per-qubit rotations exp(-i delta_j X_j), one angle per
/// transmitted qubit (eta data qubits plus parity).
class ChannelModel {
   public:
    ChannelModel(unsigned num_data_qubits, std::vector<double> angles);
    static ChannelModel noiseless(unsigned num_data_qubits);
    static ChannelModel single_error(unsigned num_data_qubits, unsigned qubit, double delta);
    /// Angle `delta` on each listed qubit, zero elsewhere.
    static ChannelModel on_qubits(unsigned num_data_qubits, std::span<const unsigned> qubits, double delta);

    unsigned num_data_qubits() const {
        return eta_;
    }
    std::span<const double> angles() const {
        return angles_;
    }

   private:
    unsigned eta_;
    std::vector<double> angles_;
};

enum class Stage : std::uint8_t {
    Prepared,
    Transmitted,
    ParityPhase,
    Returned,
    SourcePhase,
    Retransmitted,
};

const char *stage_name(Stage stage);

/// Register snapshot after one working step.
struct ProtocolState {
    StateVector reg;
    Stage stage;
};

/// Modulator, then parity generator, then channel.
UnitarySpec encode_u(const Message &message, const ChannelModel &channel);

/// Basis states whose parity qubit equals the parity of the data qubits.
MarkedSet target_set(const Message &message);

/// Probability of reading the message with a consistent parity bit.
double readout_success(const StateVector &reg, const Message &message);
/// Total probability of every other readout. Exactly 0 for a clean codeword.
double readout_error(const StateVector &reg, const Message &message);

/// Register after each of the five working steps, starting from |0...0>.
std::vector<ProtocolState> run_protocol_stages(const Message &message, const ChannelModel &channel);

/// Runs U, R_t, U^dagger, R_s, U and reports readout error before and after
/// against the cubic prediction. parameter is the largest channel angle.
DeviationReport run_protocol(const Message &message, const ChannelModel &channel);

/// One run per angle, with that angle on every qubit in `noisy_qubits`.
/// Grid points run in parallel; output order follows `deltas`.
std::vector<DeviationReport> sweep_error(std::span<const double> deltas, const Message &message,
                                         std::span<const unsigned> noisy_qubits);

}  // namespace fpsearch::ecc

#endif
