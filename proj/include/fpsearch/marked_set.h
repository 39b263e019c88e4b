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

#ifndef FPSEARCH_MARKED_SET_H
#define FPSEARCH_MARKED_SET_H

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace fpsearch {

/// Registers up to this width keep the marked set as an explicit index list.
constexpr unsigned kExplicitMarkedSetMaxQubits = 24;

/// A set of marked basis states; doubles as the oracle for target phases.
///
/// Stored as a sorted, duplicate-free index list for registers of up to
/// kExplicitMarkedSetMaxQubits qubits, and as a predicate beyond that. A
/// predicate must be pure: kernels call it concurrently.
class MarkedSet {
   public:
    using Predicate = std::function<bool(std::uint64_t)>;

    static MarkedSet from_indices(unsigned num_qubits, std::vector<std::uint64_t> members);
    static MarkedSet from_predicate(unsigned num_qubits, Predicate predicate);
    static MarkedSet empty(unsigned num_qubits);
    static MarkedSet all(unsigned num_qubits);

    unsigned num_qubits() const {
        return num_qubits_;
    }
    bool is_explicit() const {
        return !predicate_;
    }
    /// Sorted members. Only valid when is_explicit().
    std::span<const std::uint64_t> members() const;
    const Predicate &predicate() const {
        return predicate_;
    }

    bool contains(std::uint64_t index) const;
    /// |members|. Predicate sets are counted once at construction.
    std::uint64_t count() const {
        return count_;
    }
    /// Exact rational fraction |members| / 2^n, as numerator and denominator.
    std::uint64_t fraction_numerator() const {
        return count();
    }
    std::uint64_t fraction_denominator() const {
        return std::uint64_t{1} << num_qubits_;
    }
    double fraction() const;

   private:
    MarkedSet(unsigned num_qubits, std::vector<std::uint64_t> members, Predicate predicate);

    unsigned num_qubits_;
    std::vector<std::uint64_t> members_;
    Predicate predicate_;
    std::uint64_t count_;
};

}  // namespace fpsearch

#endif
