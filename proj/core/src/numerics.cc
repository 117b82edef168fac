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

#include "tlsphot/numerics.h"

#include <cmath>
#include <sstream>

#include "tlsphot/errors.h"

namespace tlsphot {

double bisect(const std::function<double(double)> &f, double lo, double hi, double tol, int max_iter) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0) {
        return lo;
    }
    if (fhi == 0) {
        return hi;
    }
    if ((flo > 0) == (fhi > 0)) {
        std::ostringstream msg;
        msg << "no sign change on [" << lo << ", " << hi << "]: f = " << flo << ", " << fhi;
        throw NoCrossingError(msg.str());
    }
    for (int k = 0; k < max_iter && hi - lo > tol; k++) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        double fm = f(mid);
        if (fm == 0) {
            return mid;
        }
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

Extremum golden_section_max(const std::function<double(double)> &f, double lo, double hi, double tol,
                            int max_iter) {
    const double r = (std::sqrt(5.0) - 1) / 2;
    double a = lo;
    double b = hi;
    double c = b - r * (b - a);
    double d = a + r * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int k = 0; k < max_iter && b - a > tol; k++) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = f(d);
        }
    }
    return fc > fd ? Extremum{c, fc} : Extremum{d, fd};
}

}  // namespace tlsphot
