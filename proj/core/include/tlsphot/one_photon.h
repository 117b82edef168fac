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

#ifndef TLSPHOT_ONE_PHOTON_H
#define TLSPHOT_ONE_PHOTON_H

#include <complex>
#include <memory>
#include <vector>

#include "tlsphot/fft.h"
#include "tlsphot/spectral_grid.h"

namespace tlsphot {

using VecPtr = std::shared_ptr<const CVec>;

inline VecPtr share(CVec v) {
    return std::make_shared<const CVec>(std::move(v));
}

/// Spectral amplitude of one photon. Values are shared and immutable.
class OnePhotonAmp {
   public:
    /// Zero amplitude.
    explicit OnePhotonAmp(GridPtr grid);
    OnePhotonAmp(GridPtr grid, CVec values);
    OnePhotonAmp(GridPtr grid, VecPtr values);

    const GridPtr &grid() const {
        return grid_;
    }
    const CVec &values() const {
        return *values_;
    }
    const VecPtr &shared_values() const {
        return values_;
    }
    int size() const {
        return (int)values_->size();
    }
    cplx operator[](int i) const {
        return (*values_)[i];
    }

    double norm_sq() const;
    OnePhotonAmp normalized() const;
    OnePhotonAmp scaled(cplx factor) const;
    /// Pointwise product with a sampled function.
    OnePhotonAmp multiplied(const CVec &factor) const;

    OnePhotonAmp operator+(const OnePhotonAmp &other) const;
    OnePhotonAmp operator-(const OnePhotonAmp &other) const;

   private:
    GridPtr grid_;
    VecPtr values_;
};

/// sum_i w_i conj(a_i) b_i
cplx inner1(const OnePhotonAmp &a, const OnePhotonAmp &b);

/// values[i] -> values[mirror(i)]. Throws on asymmetric grids.
OnePhotonAmp time_reverse(const OnePhotonAmp &a);

/// |<a|b>|^2 / (|a|^2 |b|^2), zero if either vanishes.
double mode_fidelity(const OnePhotonAmp &a, const OnePhotonAmp &b);

}  // namespace tlsphot

#endif
