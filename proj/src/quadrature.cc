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

#include "fpsearch/quadrature.h"

#include <cmath>
#include <stdexcept>

namespace fpsearch {

namespace {

double simpson(double fa, double fm, double fb, double a, double b) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double refine(const std::function<double(double)> &g, double a, double b, double fa, double fm, double fb,
              double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = g(lm);
    const double frm = g(rm);
    const double left = simpson(fa, flm, fm, a, m);
    const double right = simpson(fm, frm, fb, m, b);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return refine(g, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           refine(g, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)> &g, double a, double b, double abs_tol, int max_depth) {
    if (!(abs_tol > 0)) {
        throw std::invalid_argument("adaptive_simpson: tolerance must be positive");
    }
    if (a == b) {
        return 0.0;
    }
    const double fa = g(a);
    const double fb = g(b);
    const double fm = g(0.5 * (a + b));
    return refine(g, a, b, fa, fm, fb, simpson(fa, fm, fb, a, b), abs_tol, max_depth);
}

}  // namespace fpsearch
