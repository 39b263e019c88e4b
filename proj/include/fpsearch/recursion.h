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

#ifndef FPSEARCH_RECURSION_H
#define FPSEARCH_RECURSION_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fpsearch/analytic.h"
#include "fpsearch/marked_set.h"
#include "fpsearch/state_vector.h"
#include "fpsearch/unitary.h"

/// Compiles U_{m+1} = U_m R_s U_m^dagger R_t U_m (U_0 = U) into a flat
/// sequence of primitive operations and executes it on dense states.
namespace fpsearch::recursion {

/// Default cap on the recursion level accepted by build_um (3^12 U-type ops).
constexpr unsigned kDefaultMaxLevel = 12;

enum class OpKind : std::uint8_t { ApplyU, ApplyUAdjoint, SourcePhase, TargetPhase };

/// One primitive step. Phase kinds shift by sign * theta (theta = pi/3 by
/// default); `sign` is ignored for the U-type kinds and kept at +1.
struct PrimitiveOp {
    OpKind kind;
    int sign = +1;

    PrimitiveOp adjoint() const;
    bool is_phase() const {
        return kind == OpKind::SourcePhase || kind == OpKind::TargetPhase;
    }
    bool operator==(const PrimitiveOp &) const = default;
};

/// Operations in application order: ops.front() acts first.
struct OpSequence {
    std::vector<PrimitiveOp> ops;

    /// Reversed order with every element adjointed.
    OpSequence adjoint() const;
    std::size_t size() const {
        return ops.size();
    }
    bool operator==(const OpSequence &) const = default;

    /// Whitespace-separated tokens `U`, `U†`, `Rs+`, `Rs-`, `Rt+`, `Rt-` in
    /// application order.
    std::string str() const;
    /// Inverse of str(). Also accepts `Ud` for U^dagger.
    static OpSequence parse(std::string_view text);
};

struct OpCounts {
    std::uint64_t apply_u = 0;
    std::uint64_t apply_u_adjoint = 0;
    std::uint64_t source_phase = 0;
    std::uint64_t target_phase = 0;
};

OpCounts count_ops(const OpSequence &seq);

/// Fully expanded U_m. Throws ResourceError when m > max_level.
OpSequence build_um(unsigned m, unsigned max_level = kDefaultMaxLevel);

/// (3^m - 1) / 2, the number of target-phase queries in U_m.
std::uint64_t query_count(unsigned m);

/// U, the source |s> that the source phase acts on, and the marked targets.
struct SearchProblem {
    UnitarySpec u;
    StateVector source;
    MarkedSet targets;
};

/// Applies `seq` to `state`. Source phases act on the span of problem.source;
/// target phases on problem.targets.
StateVector apply_sequence(const OpSequence &seq, const SearchProblem &problem, StateVector state,
                           double theta = analytic::kPiOver3);

/// apply_sequence started from the source state.
StateVector execute(const OpSequence &seq, const SearchProblem &problem, double theta = analytic::kPiOver3);

StateVector execute(const OpSequence &seq, const UnitarySpec &u, const StateVector &source,
                    const MarkedSet &targets, double theta = analytic::kPiOver3);

}  // namespace fpsearch::recursion

#endif
