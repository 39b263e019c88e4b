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

#include "fpsearch/marked_set.h"

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>

#include "fpsearch/errors.h"
#include "fpsearch/state_vector.h"

namespace fpsearch {

namespace {

void check_width(unsigned num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("MarkedSet width must be in [1, " + std::to_string(kMaxQubits) + "]");
    }
}

}  // namespace

MarkedSet::MarkedSet(unsigned num_qubits, std::vector<std::uint64_t> members, Predicate predicate)
    : num_qubits_(num_qubits), members_(std::move(members)), predicate_(std::move(predicate)), count_(0) {
    if (predicate_) {
        const std::uint64_t n = std::uint64_t{1} << num_qubits_;
        for (std::uint64_t i = 0; i < n; i++) {
            count_ += predicate_(i) ? 1 : 0;
        }
    } else {
        count_ = members_.size();
    }
}

MarkedSet MarkedSet::from_indices(unsigned num_qubits, std::vector<std::uint64_t> members) {
    check_width(num_qubits);
    const std::uint64_t n = std::uint64_t{1} << num_qubits;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (!members.empty() && members.back() >= n) {
        throw std::invalid_argument(
            "marked index " + std::to_string(members.back()) + " out of range for " +
            std::to_string(num_qubits) + " qubits");
    }
    if (num_qubits > kExplicitMarkedSetMaxQubits) {
        auto shared = std::make_shared<std::vector<std::uint64_t>>(std::move(members));
        return MarkedSet(num_qubits, {}, [shared](std::uint64_t x) {
            return std::binary_search(shared->begin(), shared->end(), x);
        });
    }
    return MarkedSet(num_qubits, std::move(members), nullptr);
}

MarkedSet MarkedSet::from_predicate(unsigned num_qubits, Predicate predicate) {
    check_width(num_qubits);
    if (!predicate) {
        throw std::invalid_argument("MarkedSet::from_predicate: empty predicate");
    }
    if (num_qubits <= kExplicitMarkedSetMaxQubits) {
        const std::uint64_t n = std::uint64_t{1} << num_qubits;
        std::vector<std::uint64_t> members;
        for (std::uint64_t i = 0; i < n; i++) {
            if (predicate(i)) {
                members.push_back(i);
            }
        }
        return MarkedSet(num_qubits, std::move(members), nullptr);
    }
    return MarkedSet(num_qubits, {}, std::move(predicate));
}

MarkedSet MarkedSet::empty(unsigned num_qubits) {
    return from_indices(num_qubits, {});
}

MarkedSet MarkedSet::all(unsigned num_qubits) {
    return from_predicate(num_qubits, [](std::uint64_t) {
        return true;
    });
}

std::span<const std::uint64_t> MarkedSet::members() const {
    if (predicate_) {
        throw std::logic_error("MarkedSet::members: set is predicate-backed");
    }
    return members_;
}

bool MarkedSet::contains(std::uint64_t index) const {
    if (predicate_) {
        return index < fraction_denominator() && predicate_(index);
    }
    return std::binary_search(members_.begin(), members_.end(), index);
}

double MarkedSet::fraction() const {
    return static_cast<double>(count_) / static_cast<double>(fraction_denominator());
}

}  // namespace fpsearch
