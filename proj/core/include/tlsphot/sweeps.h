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

#ifndef TLSPHOT_SWEEPS_H
#define TLSPHOT_SWEEPS_H

#include <string>
#include <vector>

#include "tlsphot/circuits.h"
#include "tlsphot/table.h"

namespace tlsphot {

struct SweepSpec {
    std::vector<double> betas{1.0, 0.95, 0.90};
    double sigma_min = 0.02;
    double sigma_max = 5.0;
    int sigma_count = 100;
    PulseKind kind = PulseKind::kLorentzian;
    GridConfig grid{};
    /// Values of beta_dir where curve values are re-derived by full circuit simulation.
    std::vector<double> spot_betas{1.0, 0.95};
    /// Widths where the lossless eta curve is re-derived by quadrature.
    std::vector<double> check_sigmas{0.1, 0.25, 0.5, 1.0, 2.0};

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
    /// sigma_count log-spaced widths from sigma_min to sigma_max.
    std::vector<double> sigmas() const;
    MatchingOptions matching() const;
};

/// A scalar whose stability under grid refinement is reported.
struct Headline {
    std::string name;
    double value;
};

struct SweepOutput {
    std::vector<Table> tables;
    std::vector<Headline> headlines;
};

/// eta and epsilon1^2/2 against width for each beta, the crossings, and quadrature checks.
SweepOutput fig1b_data(const SweepSpec &spec);
/// Loss of a scattered pair and of two separately scattered photons at both matching widths.
SweepOutput loss_curves(const SweepSpec &spec);
/// Bell and CZ success against beta with circuit-simulated spot checks.
SweepOutput fig3_data(const SweepSpec &spec);
/// Both matching widths for each beta.
SweepOutput matching_points(const SweepSpec &spec);

}  // namespace tlsphot

#endif
