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

#ifndef TLSPHOT_MODE_OPS_H
#define TLSPHOT_MODE_OPS_H

#include "tlsphot/photonic_state.h"

namespace tlsphot {

/// Quantum pulse gate: a pump shaped like pump_mode converts that one spectral mode to the
/// sum frequency with probability efficiency.
struct PulseGateSpec {
    OnePhotonAmp pump_mode;
    double efficiency = 1.0;
};

/// Normalizes the mode and checks the efficiency.
PulseGateSpec make_pulse_gate(const OnePhotonAmp &mode, double efficiency = 1.0);

/// How a gate acts on two photons sharing the signal rail.
///
/// kNumberSelective converts a pair only through its both-in-pump-mode projection and leaves
/// the rest of the pair on the signal rail, which is the idealized sorter. kPhotonWise treats
/// each photon independently, so a pair partially in the pump mode splits across both rails.
enum class SfgModel { kNumberSelective, kPhotonWise };

std::string_view to_string(SfgModel m);
SfgModel parse_sfg_model(std::string_view name);

struct SfgResult {
    FewPhotonState state;
    /// Probability of a photon left on both the signal and the ancilla, moved to lost_mass.
    double leakage = 0;
};

/// Moves the pump-mode part of the signal rail onto an empty ancilla rail.
SfgResult sfg_extract(const FewPhotonState &state, int signal, int ancilla, const PulseGateSpec &spec,
                      SfgModel model = SfgModel::kNumberSelective);

/// Converts the ancilla back onto the signal rail. Throws ContractViolation when more than
/// tol of the ancilla population is outside the pump mode.
FewPhotonState sfg_reverse(const FewPhotonState &state, int ancilla, int signal, const PulseGateSpec &spec,
                           double tol = 1e-6);

/// Time inversion of everything on the rail, F(d) -> F(-d).
FewPhotonState gem_invert(const FewPhotonState &state, int rail);

/// Multiplies the components holding exactly n_photons on the rail by
/// e^{i phase} amp_transmission^n_photons. Removed probability goes to lost_mass.
FewPhotonState component_phase_loss(const FewPhotonState &state, int rail, int n_photons, double phase,
                                    double amp_transmission);

/// Probability that a pair with amplitude psi has exactly one photon in the pump mode.
double leakage_metric(const PulseGateSpec &spec, const TwoPhotonAmp &psi);

}  // namespace tlsphot

#endif
