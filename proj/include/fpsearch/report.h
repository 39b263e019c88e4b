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

#ifndef FPSEARCH_REPORT_H
#define FPSEARCH_REPORT_H

#include <cmath>
#include <cstdint>

namespace fpsearch {

/// One experiment outcome: error before correction, the closed-form
/// prediction, and what the simulator measured.
struct DeviationReport {
    /// Sweep coordinate (channel angle, recursion level, ...).
    double parameter = 0;
    double epsilon_before = 0;
    double predicted = 0;
    double measured = 0;
    std::uint64_t queries = 0;

    double gap() const {
        return std::abs(predicted - measured);
    }
};

}  // namespace fpsearch

#endif
