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

#ifndef TLSPHOT_CIRCUITS_H
#define TLSPHOT_CIRCUITS_H

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tlsphot/mode_ops.h"

namespace tlsphot {

/// Emitter, pulse and grid a circuit runs at, with the scattering figures of merit there.
struct OperatingPoint {
    TlsParams tls;
    PulseShape pulse;
    GridPtr grid;
    /// Input mode f.
    OnePhotonAmp mode;
    /// Normalized single-photon image t f, the pump mode of every pulse gate.
    OnePhotonAmp scattered_mode;
    double epsilon1 = 1;
    double epsilon_b = 2;
    /// eta by quadrature on this grid.
    double eta = 0.5;
    /// epsilon1^2 / (epsilon_b - epsilon1^2)
    double eta2 = 1;
    /// |eta - epsilon1^2 / 2| on this grid.
    double matching_residual = 0;
};

struct OperatingPointOptions {
    PulseKind kind = PulseKind::kLorentzian;
    /// Width to run at. Unset selects the matching width on the requested branch.
    std::optional<double> sigma;
    Branch branch = Branch::kUpper;
    GridConfig grid{};
};

/// epsilon1 and epsilon_b come from the closed forms for Lorentzian pulses and from
/// quadrature otherwise.
OperatingPoint make_operating_point(const TlsParams &p, const OperatingPointOptions &opts = {});

struct CircuitOptions {
    SfgModel sfg_model = SfgModel::kNumberSelective;
    double efficiency = 1.0;
    /// Apply the two-photon loss eta2 inside lossy NS gates.
    bool compensate = true;
    std::optional<double> eta2_override;
    /// Amplitude transmission of the CZ outer arms. Unset calibrates it from a single-photon NS run.
    std::optional<double> outer_transmission;
    /// Largest |eta - epsilon1^2/2| accepted without a warning.
    double matching_tolerance = 1e-3;
};

struct CircuitReport {
    FewPhotonState output_state;
    double success_prob = 0;
    double fidelity_to_target = 0;
    double lost_mass = 0;
    std::map<DetectionPattern, double> pattern_probs;
    /// Named figures specific to each circuit.
    std::map<std::string, double> metrics;
    std::vector<std::string> warnings;
};

struct SorterResult {
    FewPhotonState state;
    /// Index of the sum-frequency rail holding the sorted single photon.
    int ancilla = -1;
    /// Probability moved to lost_mass by signal/ancilla coincidences.
    double leakage = 0;
    /// Fraction of the scattered pair with exactly one photon in the pump mode, i.e. what a
    /// photon-wise gate would split off. Diagnostic only.
    double pair_leakage_fraction = 0;
    double matching_residual = 0;
    bool matched = true;
};

/// Emitter followed by a pulse gate onto a new sum-frequency rail.
SorterResult photon_sorter(const FewPhotonState &state, int rail, const OperatingPoint &op,
                           const CircuitOptions &opts = {});

enum class BellState { kPsiPlus, kPsiMinus, kPhiPlus, kPhiMinus };

std::string_view to_string(BellState b);

inline constexpr std::array<BellState, 4> kBellStates = {BellState::kPsiPlus, BellState::kPsiMinus,
                                                         BellState::kPhiPlus, BellState::kPhiMinus};

/// Dual-rail qubit rails in the order the circuits expect: u1, l1, u2, l2.
std::vector<Rail> dual_rail_rails();

/// Bell state of two dual-rail qubits whose logical zero is the photon in the upper rail.
FewPhotonState make_bell_state(BellState b, const OnePhotonAmp &mode);

/// Detector pairs (1-based) that herald each Bell state.
std::vector<std::pair<int, int>> bell_signature(BellState b);

/// One row of the analyzer network: a beamsplitter or a sorter in application order.
struct NetworkElement {
    std::string kind;
    std::string rail_a;
    std::string rail_b;
    double theta = 0;
    double phi = 0;
};

std::vector<NetworkElement> bell_network();
/// Detector number (1-8) to rail label of the analyzer output.
std::vector<std::pair<int, std::string>> bell_detectors();

struct BellReport : CircuitReport {
    std::map<std::pair<int, int>, double> detector_pairs;
    /// Probability of fewer than two retained photons; equals the lost probability.
    double below_two = 0;
    std::optional<BellState> identified;
    /// Retained two-photon probability outside the identified state's pairs.
    double off_target = 0;
};

/// Runs the analyzer on a state over dual_rail_rails(). The identified state is the one whose
/// detector pairs carry the most probability; success_prob is that probability and
/// fidelity_to_target the fraction of retained two-photon probability it represents.
BellReport bell_analyzer(const FewPhotonState &q1q2, const OperatingPoint &op, const CircuitOptions &opts = {});

/// Emitter, pulse gate, pi phase with loss eta2 on the pair, reverse gate, time inversion,
/// emitter. The ancilla rail is added and traced out internally.
FewPhotonState ns_gate(const FewPhotonState &state, int rail, const OperatingPoint &op,
                       const CircuitOptions &opts = {});

/// The NS gate's amplitude on a single photon in the input mode, |<f|NS|1_f>|.
double ns_single_photon_transmission(const OperatingPoint &op, const CircuitOptions &opts = {});

/// Logical amplitudes in rail order (u1 u2), (u1 l2), (l1 u2), (l1 l2), each the projection on
/// the input mode pair.
std::array<cplx, 4> logical_amplitudes(const FewPhotonState &state, const OnePhotonAmp &mode);

/// Two dual-rail qubits with the given logical amplitudes in logical_amplitudes order.
FewPhotonState make_logical_state(const std::array<cplx, 4> &amps, const OnePhotonAmp &mode);

/// Central interferometer between l1 and u2 with an NS gate in each arm. The sign flips on the
/// (l1, u2) occupation. Outer rails u1 and l2 pass through loss matched to the NS arms.
CircuitReport cz_gate(const FewPhotonState &q1q2, const OperatingPoint &op, const CircuitOptions &opts = {});

struct SuccessRow {
    double beta = 1;
    double sigma = 0;
    double epsilon1 = 1;
    double epsilon_b = 2;
    double bell = 1;
    double cz = 1;
    double loss_two_photon = 0;
    double loss_single_pair = 0;
    bool flagged = false;
    std::string note;
};

/// Matching width on the given branch and the success and loss figures there.
SuccessRow success_row(double beta, const MatchingOptions &opts = {}, Branch branch = Branch::kUpper);
std::vector<SuccessRow> success_curves(const std::vector<double> &betas, const MatchingOptions &opts = {},
                                       Branch branch = Branch::kUpper);

}  // namespace tlsphot

#endif
