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

#ifndef TLSPHOT_SPECTRAL_OP_H
#define TLSPHOT_SPECTRAL_OP_H

#include <memory>

#include "tlsphot/two_photon.h"

namespace tlsphot {

/// Linear map on a single photon's spectral amplitude.
///
/// Copies share a memo of already transformed vectors so that terms of a two-photon amplitude
/// that shared a vector before the map still share one afterwards.
class SpectralOp {
   public:
    enum class Kind { kScale, kDiagonal, kProjector, kReflection };

    static SpectralOp identity();
    static SpectralOp scale(cplx factor);
    /// Frequency-pointwise multiplication.
    static SpectralOp diagonal(CVec factor, cplx scale = 1.0);
    /// scale * |out><in|
    static SpectralOp projector(const OnePhotonAmp &out, const OnePhotonAmp &in, cplx scale = 1.0);
    /// scale * F(d) -> F(-d)
    static SpectralOp reflection(cplx scale = 1.0);

    Kind kind() const {
        return kind_;
    }
    cplx factor() const {
        return factor_;
    }

    OnePhotonAmp apply(const OnePhotonAmp &f) const;

    /// Image of a vector under the unscaled map. Not for projectors.
    VecPtr map_vector(const VecPtr &v) const;
    /// <in|v> for projectors.
    cplx project(const VecPtr &v) const;
    const VecPtr &out_mode() const {
        return out_;
    }
    const OnePhotonAmp &in_mode() const {
        return *in_;
    }

   private:
    struct Memo;
    SpectralOp(Kind kind, cplx factor);

    Kind kind_;
    cplx factor_;
    std::shared_ptr<const CVec> diag_;
    VecPtr out_;
    std::shared_ptr<const OnePhotonAmp> in_;
    std::shared_ptr<Memo> memo_;
};

/// Applies first_op to the first photon and second_op to the second.
///
/// Reflecting only one side of a term that depends on the total detuning has no representation
/// in this form and throws UnsupportedOperation.
JointAmp apply_pair(const SpectralOp &first_op, const SpectralOp &second_op, const JointAmp &psi);

}  // namespace tlsphot

#endif
