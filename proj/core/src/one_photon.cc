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

#include "tlsphot/one_photon.h"

#include <cmath>
#include <stdexcept>

#include "tlsphot/errors.h"

namespace tlsphot {

OnePhotonAmp::OnePhotonAmp(GridPtr grid) : OnePhotonAmp(grid, CVec(grid->size(), cplx{0, 0})) {
}

OnePhotonAmp::OnePhotonAmp(GridPtr grid, CVec values) : OnePhotonAmp(std::move(grid), share(std::move(values))) {
}

OnePhotonAmp::OnePhotonAmp(GridPtr grid, VecPtr values) : grid_(std::move(grid)), values_(std::move(values)) {
    if (!grid_ || !values_ || (int)values_->size() != grid_->size()) {
        throw std::invalid_argument("amplitude length does not match its grid");
    }
}

double OnePhotonAmp::norm_sq() const {
    const auto &w = grid_->weights();
    double acc = 0;
    for (size_t i = 0; i < values_->size(); i++) {
        acc += w[i] * std::norm((*values_)[i]);
    }
    return acc;
}

OnePhotonAmp OnePhotonAmp::normalized() const {
    double n = norm_sq();
    if (!(n > 0)) {
        throw std::domain_error("cannot normalize a zero amplitude");
    }
    return scaled(1.0 / std::sqrt(n));
}

OnePhotonAmp OnePhotonAmp::scaled(cplx factor) const {
    CVec v(*values_);
    for (auto &x : v) {
        x *= factor;
    }
    return OnePhotonAmp(grid_, std::move(v));
}

OnePhotonAmp OnePhotonAmp::multiplied(const CVec &factor) const {
    if (factor.size() != values_->size()) {
        throw std::invalid_argument("factor length does not match the grid");
    }
    CVec v(*values_);
    for (size_t i = 0; i < v.size(); i++) {
        v[i] *= factor[i];
    }
    return OnePhotonAmp(grid_, std::move(v));
}

OnePhotonAmp OnePhotonAmp::operator+(const OnePhotonAmp &other) const {
    require_same_grid(grid_, other.grid_);
    CVec v(*values_);
    for (size_t i = 0; i < v.size(); i++) {
        v[i] += other[(int)i];
    }
    return OnePhotonAmp(grid_, std::move(v));
}

OnePhotonAmp OnePhotonAmp::operator-(const OnePhotonAmp &other) const {
    return *this + other.scaled(-1.0);
}

cplx inner1(const OnePhotonAmp &a, const OnePhotonAmp &b) {
    require_same_grid(a.grid(), b.grid());
    const auto &w = a.grid()->weights();
    cplx acc{0, 0};
    for (int i = 0; i < a.size(); i++) {
        acc += w[i] * std::conj(a[i]) * b[i];
    }
    return acc;
}

OnePhotonAmp time_reverse(const OnePhotonAmp &a) {
    const SpectralGrid &g = *a.grid();
    CVec v(a.size());
    for (int i = 0; i < a.size(); i++) {
        v[g.mirror(i)] = a[i];
    }
    return OnePhotonAmp(a.grid(), std::move(v));
}

double mode_fidelity(const OnePhotonAmp &a, const OnePhotonAmp &b) {
    double na = a.norm_sq();
    double nb = b.norm_sq();
    if (na <= 0 || nb <= 0) {
        return 0;
    }
    return std::norm(inner1(a, b)) / (na * nb);
}

}  // namespace tlsphot
