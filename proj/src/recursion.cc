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

#include "fpsearch/recursion.h"

#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "fpsearch/errors.h"
#include "fpsearch/hilbert.h"

namespace fpsearch::recursion {

PrimitiveOp PrimitiveOp::adjoint() const {
    switch (kind) {
        case OpKind::ApplyU:
            return {OpKind::ApplyUAdjoint, +1};
        case OpKind::ApplyUAdjoint:
            return {OpKind::ApplyU, +1};
        default:
            return {kind, -sign};
    }
}

OpSequence OpSequence::adjoint() const {
    OpSequence out;
    out.ops.reserve(ops.size());
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        out.ops.push_back(it->adjoint());
    }
    return out;
}

std::string OpSequence::str() const {
    std::string out;
    for (const auto &op : ops) {
        if (!out.empty()) {
            out += ' ';
        }
        switch (op.kind) {
            case OpKind::ApplyU:
                out += "U";
                break;
            case OpKind::ApplyUAdjoint:
                out += "U†";
                break;
            case OpKind::SourcePhase:
                out += op.sign > 0 ? "Rs+" : "Rs-";
                break;
            case OpKind::TargetPhase:
                out += op.sign > 0 ? "Rt+" : "Rt-";
                break;
        }
    }
    return out;
}

OpSequence OpSequence::parse(std::string_view text) {
    OpSequence out;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        if (token == "U") {
            out.ops.push_back({OpKind::ApplyU});
        } else if (token == "U†" || token == "Ud") {
            out.ops.push_back({OpKind::ApplyUAdjoint});
        } else if (token == "Rs+") {
            out.ops.push_back({OpKind::SourcePhase, +1});
        } else if (token == "Rs-") {
            out.ops.push_back({OpKind::SourcePhase, -1});
        } else if (token == "Rt+") {
            out.ops.push_back({OpKind::TargetPhase, +1});
        } else if (token == "Rt-") {
            out.ops.push_back({OpKind::TargetPhase, -1});
        } else {
            throw std::invalid_argument("OpSequence::parse: unknown token '" + token + "'");
        }
    }
    return out;
}

OpCounts count_ops(const OpSequence &seq) {
    OpCounts c;
    for (const auto &op : seq.ops) {
        switch (op.kind) {
            case OpKind::ApplyU:
                c.apply_u++;
                break;
            case OpKind::ApplyUAdjoint:
                c.apply_u_adjoint++;
                break;
            case OpKind::SourcePhase:
                c.source_phase++;
                break;
            case OpKind::TargetPhase:
                c.target_phase++;
                break;
        }
    }
    return c;
}

OpSequence build_um(unsigned m, unsigned max_level) {
    if (m > max_level) {
        throw ResourceError(
            "build_um: level " + std::to_string(m) + " exceeds the cap of " + std::to_string(max_level));
    }
    OpSequence seq{{{OpKind::ApplyU}}};
    for (unsigned level = 0; level < m; level++) {
        // Application order of U_m R_s U_m^dagger R_t U_m.
        OpSequence inv = seq.adjoint();
        OpSequence next;
        next.ops.reserve(3 * seq.size() + 2);
        next.ops.insert(next.ops.end(), seq.ops.begin(), seq.ops.end());
        next.ops.push_back({OpKind::TargetPhase, +1});
        next.ops.insert(next.ops.end(), inv.ops.begin(), inv.ops.end());
        next.ops.push_back({OpKind::SourcePhase, +1});
        next.ops.insert(next.ops.end(), seq.ops.begin(), seq.ops.end());
        seq = std::move(next);
    }
    return seq;
}

std::uint64_t query_count(unsigned m) {
    if (m > analytic::kMaxRecursionLevel) {
        throw ResourceError("query_count: level exceeds 64-bit range");
    }
    std::uint64_t q = 0;
    for (unsigned level = 0; level < m; level++) {
        q = 3 * q + 1;
    }
    return q;
}

namespace {

// Index of |s> when the source is a computational basis state.
std::optional<std::uint64_t> basis_index(const StateVector &source) {
    std::optional<std::uint64_t> found;
    for (std::uint64_t i = 0; i < source.size(); i++) {
        if (source[i] == amp{0}) {
            continue;
        }
        if (found || std::abs(std::abs(source[i]) - 1.0) > 1e-15) {
            return std::nullopt;
        }
        found = i;
    }
    return found;
}

}  // namespace

StateVector apply_sequence(const OpSequence &seq, const SearchProblem &problem, StateVector state, double theta) {
    const unsigned n = state.num_qubits();
    if (num_qubits(problem.u) != n || problem.source.num_qubits() != n || problem.targets.num_qubits() != n) {
        throw std::invalid_argument("apply_sequence: dimension mismatch between U, source, targets and state");
    }
    const auto source_index = basis_index(problem.source);
    for (const auto &op : seq.ops) {
        switch (op.kind) {
            case OpKind::ApplyU:
                state = hilbert::apply_unitary(std::move(state), problem.u, false);
                break;
            case OpKind::ApplyUAdjoint:
                state = hilbert::apply_unitary(std::move(state), problem.u, true);
                break;
            case OpKind::SourcePhase:
                if (source_index) {
                    // Carries the source's own phase, so |s> = c|x> with |c| = 1 still gets e^{i theta}.
                    state[*source_index] *= std::polar(1.0, op.sign * theta);
                } else {
                    state = hilbert::apply_phase_along(std::move(state), problem.source, op.sign * theta);
                }
                break;
            case OpKind::TargetPhase:
                state = hilbert::apply_selective_phase(std::move(state), problem.targets, op.sign * theta);
                break;
        }
    }
    return state;
}

StateVector execute(const OpSequence &seq, const SearchProblem &problem, double theta) {
    return apply_sequence(seq, problem, problem.source, theta);
}

StateVector execute(const OpSequence &seq, const UnitarySpec &u, const StateVector &source,
                    const MarkedSet &targets, double theta) {
    return execute(seq, SearchProblem{u, source, targets}, theta);
}

}  // namespace fpsearch::recursion
