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

#include "fpsearch/ecc.h"

#include <algorithm>
#include <bit>
#include <exception>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fpsearch/analytic.h"
#include "fpsearch/errors.h"
#include "fpsearch/hilbert.h"

namespace fpsearch::ecc {

Message::Message(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    if (bits_.empty()) {
        throw std::invalid_argument("Message must carry at least one bit");
    }
    for (auto b : bits_) {
        if (b > 1) {
            throw std::invalid_argument("Message bits must be 0 or 1");
        }
    }
}

Message Message::parse(std::string_view text) {
    std::vector<std::uint8_t> bits;
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("Message::parse: expected a 0/1 string, got '" + std::string(text) + "'");
        }
        bits.push_back(c == '1' ? 1 : 0);
    }
    return Message(std::move(bits));
}

std::uint8_t Message::parity() const {
    std::uint8_t p = 0;
    for (auto b : bits_) {
        p ^= b;
    }
    return p;
}

std::uint64_t Message::codeword() const {
    std::uint64_t x = 0;
    for (unsigned j = 0; j < size(); j++) {
        x |= std::uint64_t{bits_[j]} << j;
    }
    return x | (std::uint64_t{parity()} << size());
}

ChannelModel::ChannelModel(unsigned num_data_qubits, std::vector<double> angles)
    : eta_(num_data_qubits), angles_(std::move(angles)) {
    if (eta_ < 1) {
        throw std::invalid_argument("ChannelModel needs at least one data qubit");
    }
    if (angles_.size() != eta_ + 1) {
        throw std::invalid_argument(
            "ChannelModel needs " + std::to_string(eta_ + 1) + " angles, got " + std::to_string(angles_.size()));
    }
}

ChannelModel ChannelModel::noiseless(unsigned num_data_qubits) {
    return ChannelModel(num_data_qubits, std::vector<double>(num_data_qubits + 1, 0.0));
}

ChannelModel ChannelModel::single_error(unsigned num_data_qubits, unsigned qubit, double delta) {
    const unsigned q[] = {qubit};
    return on_qubits(num_data_qubits, q, delta);
}

ChannelModel ChannelModel::on_qubits(unsigned num_data_qubits, std::span<const unsigned> qubits, double delta) {
    std::vector<double> angles(num_data_qubits + 1, 0.0);
    for (unsigned q : qubits) {
        if (q > num_data_qubits) {
            throw std::invalid_argument(
                "ChannelModel: qubit " + std::to_string(q) + " is outside the " +
                std::to_string(num_data_qubits + 1) + "-qubit register");
        }
        angles[q] = delta;
    }
    return ChannelModel(num_data_qubits, std::move(angles));
}

const char *stage_name(Stage stage) {
    switch (stage) {
        case Stage::Prepared:
            return "prepared";
        case Stage::Transmitted:
            return "transmitted";
        case Stage::ParityPhase:
            return "parity-phase";
        case Stage::Returned:
            return "returned";
        case Stage::SourcePhase:
            return "source-phase";
        case Stage::Retransmitted:
            return "retransmitted";
    }
    return "?";
}

UnitarySpec encode_u(const Message &message, const ChannelModel &channel) {
    if (message.size() != channel.num_data_qubits()) {
        throw std::invalid_argument(
            "encode_u: message has " + std::to_string(message.size()) + " bits but the channel carries " +
            std::to_string(channel.num_data_qubits()) + " data qubits");
    }
    EccChannel c{
        {message.bits().begin(), message.bits().end()},
        {channel.angles().begin(), channel.angles().end()},
    };
    validate(c);
    return c;
}

MarkedSet target_set(const Message &message) {
    const unsigned eta = message.size();
    const std::uint64_t data_mask = (std::uint64_t{1} << eta) - 1;
    return MarkedSet::from_predicate(eta + 1, [eta, data_mask](std::uint64_t x) {
        const unsigned stored = static_cast<unsigned>((x >> eta) & 1);
        const unsigned computed = static_cast<unsigned>(std::popcount(x & data_mask) & 1);
        return stored == computed;
    });
}

double readout_success(const StateVector &reg, const Message &message) {
    return std::norm(reg[message.codeword()]);
}

double readout_error(const StateVector &reg, const Message &message) {
    const std::uint64_t c = message.codeword();
    double total = 0;
    for (std::uint64_t x = 0; x < reg.size(); x++) {
        if (x != c) {
            total += std::norm(reg[x]);
        }
    }
    return total;
}

std::vector<ProtocolState> run_protocol_stages(const Message &message, const ChannelModel &channel) {
    if (message.size() > kMaxDataQubits) {
        throw ResourceError(
            "run_protocol: " + std::to_string(message.size()) + " data qubits exceeds the cap of " +
            std::to_string(kMaxDataQubits));
    }
    const UnitarySpec u = encode_u(message, channel);
    const MarkedSet targets = target_set(message);
    const unsigned width = message.size() + 1;
    const double theta = analytic::kPiOver3;

    std::vector<ProtocolState> stages;
    stages.reserve(6);
    StateVector reg = hilbert::basis_state(width, 0);
    stages.push_back({reg, Stage::Prepared});

    // 1. modulator, parity generator, channel.
    reg = hilbert::apply_unitary(std::move(reg), u, false);
    stages.push_back({reg, Stage::Transmitted});
    // 2. receiver parity check drives the output register's pi/3 phase.
    reg = hilbert::apply_selective_phase(std::move(reg), targets, theta);
    stages.push_back({reg, Stage::ParityPhase});
    // 3. propagate back through channel, parity generator and modulator.
    reg = hilbert::apply_unitary(std::move(reg), u, true);
    stages.push_back({reg, Stage::Returned});
    // 4. input register shifts the phase of |0...0>.
    reg[0] *= std::polar(1.0, theta);
    stages.push_back({reg, Stage::SourcePhase});
    // 5. transmit again.
    reg = hilbert::apply_unitary(std::move(reg), u, false);
    stages.push_back({std::move(reg), Stage::Retransmitted});

    for (const auto &s : stages) {
        if (std::abs(s.reg.norm_squared() - 1.0) > 1e-12) {
            throw std::logic_error(std::string("run_protocol: norm drifted at stage ") + stage_name(s.stage));
        }
    }
    return stages;
}

DeviationReport run_protocol(const Message &message, const ChannelModel &channel) {
    const auto stages = run_protocol_stages(message, channel);
    DeviationReport r;
    for (double a : channel.angles()) {
        r.parameter = std::max(r.parameter, std::abs(a));
    }
    r.epsilon_before = std::clamp(readout_error(stages[1].reg, message), 0.0, 1.0);
    r.measured = std::clamp(readout_error(stages.back().reg, message), 0.0, 1.0);
    r.predicted = analytic::deviation_after_one(r.epsilon_before);
    r.queries = 1;
    return r;
}

std::vector<DeviationReport> sweep_error(std::span<const double> deltas, const Message &message,
                                         std::span<const unsigned> noisy_qubits) {
    std::vector<ChannelModel> channels;
    channels.reserve(deltas.size());
    for (double d : deltas) {
        channels.push_back(ChannelModel::on_qubits(message.size(), noisy_qubits, d));
    }
    std::vector<DeviationReport> out(deltas.size());
    const auto n = static_cast<std::int64_t>(deltas.size());
    // Exceptions must not escape the parallel region.
    std::vector<std::exception_ptr> errors(deltas.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; i++) {
        try {
            out[i] = run_protocol(message, channels[i]);
            out[i].parameter = deltas[i];
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return out;
}

}  // namespace fpsearch::ecc
