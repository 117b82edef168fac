// Copyright 2026 The tlsphot Authors
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

#ifndef TLSPHOT_NUMERICS_H
#define TLSPHOT_NUMERICS_H

#include <functional>

namespace tlsphot {

/// Root of f in [lo, hi] by bisection until the bracket is narrower than tol.
/// Throws NoCrossingError when f(lo) and f(hi) share a sign.
double bisect(const std::function<double(double)> &f, double lo, double hi, double tol, int max_iter = 400);

struct Extremum {
    double x = 0;
    double value = 0;
};

/// Maximum of a unimodal f on [lo, hi].
Extremum golden_section_max(const std::function<double(double)> &f, double lo, double hi, double tol,
                            int max_iter = 400);

}  // namespace tlsphot

#endif
