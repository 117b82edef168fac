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

#ifndef TLSPHOT_PULSE_H
#define TLSPHOT_PULSE_H

#include <string>
#include <string_view>

#include "tlsphot/one_photon.h"
#include "tlsphot/spectral_grid.h"

namespace tlsphot {

enum class PulseKind { kLorentzian, kGaussian };

std::string_view to_string(PulseKind kind);
PulseKind parse_pulse_kind(std::string_view name);

struct PulseShape {
    PulseKind kind = PulseKind::kLorentzian;
    double sigma = 1.0;
    double center = 0.0;
};

/// Continuous unit-norm amplitude.
///
/// Lorentzian: sqrt(2 sigma^3 / pi) / (sigma^2 + (d - d0)^2).
/// Gaussian: (2 pi sigma^2)^(-1/4) exp(-(d - d0)^2 / (4 sigma^2)), so |f|^2 has standard deviation sigma.
double pulse_value(const PulseShape &shape, double delta);

inline constexpr double kMaxSpacingRatio = 0.2;
inline constexpr double kRecommendedSpacingRatio = 0.1;

struct ResolutionReport {
    double spacing = 0;
    double max_spacing = 0;
    double recommended_spacing = 0;
    double window = 0;
    double required_window = 0;

    bool spacing_ok() const {
        return spacing <= max_spacing * (1 + 1e-12);
    }
    bool window_ok() const {
        return window >= required_window * (1 - 1e-12);
    }
    bool ok() const {
        return spacing_ok() && window_ok();
    }
    bool recommended() const {
        return ok() && spacing <= recommended_spacing * (1 + 1e-12);
    }
    std::string describe() const;
};

/// Hard bounds: h <= sigma/5 and delta_max >= |d0| + 25 sigma. Recommended: h <= sigma/10.
ResolutionReport check_resolution(const PulseShape &shape, const SpectralGrid &grid);

/// Samples the shape and renormalizes to unit discrete norm. Throws ResolutionError.
OnePhotonAmp make_pulse(const PulseShape &shape, GridPtr grid);

}  // namespace tlsphot

#endif
