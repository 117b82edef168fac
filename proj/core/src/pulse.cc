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

#include "tlsphot/pulse.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "tlsphot/errors.h"

namespace tlsphot {

std::string_view to_string(PulseKind kind) {
    return kind == PulseKind::kLorentzian ? "lorentzian" : "gaussian";
}

PulseKind parse_pulse_kind(std::string_view name) {
    if (name == "lorentzian") {
        return PulseKind::kLorentzian;
    }
    if (name == "gaussian") {
        return PulseKind::kGaussian;
    }
    throw std::invalid_argument("unknown pulse shape '" + std::string(name) + "' (expected lorentzian or gaussian)");
}

double pulse_value(const PulseShape &shape, double delta) {
    double s = shape.sigma;
    double x = delta - shape.center;
    if (shape.kind == PulseKind::kLorentzian) {
        return std::sqrt(2 * s * s * s / std::numbers::pi) / (s * s + x * x);
    }
    return std::pow(2 * std::numbers::pi * s * s, -0.25) * std::exp(-x * x / (4 * s * s));
}

std::string ResolutionReport::describe() const {
    std::ostringstream out;
    if (!spacing_ok()) {
        out << "grid spacing " << spacing << " exceeds the bound sigma/5 = " << max_spacing;
    } else if (!window_ok()) {
        out << "grid half-width " << window << " is below |center| + 25 sigma = " << required_window;
    } else if (!recommended()) {
        out << "grid spacing " << spacing << " exceeds the recommended sigma/10 = " << recommended_spacing;
    } else {
        out << "grid resolves the pulse";
    }
    return out.str();
}

ResolutionReport check_resolution(const PulseShape &shape, const SpectralGrid &grid) {
    ResolutionReport r;
    r.spacing = grid.spacing();
    r.max_spacing = kMaxSpacingRatio * shape.sigma;
    r.recommended_spacing = kRecommendedSpacingRatio * shape.sigma;
    r.window = std::min(grid.delta_max(), -grid.delta_min());
    r.required_window = std::abs(shape.center) + kWindowFactor * shape.sigma;
    return r;
}

OnePhotonAmp make_pulse(const PulseShape &shape, GridPtr grid) {
    if (!(shape.sigma > 0) || !std::isfinite(shape.sigma)) {
        throw DomainError("pulse width sigma must be positive");
    }
    ResolutionReport r = check_resolution(shape, *grid);
    if (!r.ok()) {
        throw ResolutionError(r.describe());
    }
    CVec v(grid->size());
    for (int i = 0; i < grid->size(); i++) {
        v[i] = pulse_value(shape, grid->detuning(i));
    }
    return OnePhotonAmp(std::move(grid), std::move(v)).normalized();
}

}  // namespace tlsphot
