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

#ifndef FPSEARCH_QUADRATURE_H
#define FPSEARCH_QUADRATURE_H

#include <functional>

namespace fpsearch {

/// Adaptive Simpson integration of g over [a, b] to absolute tolerance
/// `abs_tol`. Subintervals stop splitting at `max_depth`.
double adaptive_simpson(const std::function<double(double)> &g, double a, double b, double abs_tol = 1e-10,
                        int max_depth = 50);

}  // namespace fpsearch

#endif
