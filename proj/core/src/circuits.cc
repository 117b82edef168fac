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

#include "tlsphot/circuits.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "tlsphot/errors.h"

namespace tlsphot {

OperatingPoint make_operating_point(const TlsParams &p, const OperatingPointOptions &opts) {
    p.validate();
    MatchingOptions mo;
    mo.kind = opts.kind;
    mo.grid = opts.grid;
    double sigma = opts.sigma ? *opts.sigma : matching_sigma(p, opts.branch, mo);
    GridPtr grid = grid_for_pulse(opts.grid, sigma, 0.0, p.gamma_wg, p.gamma_loss);
    PulseShape shape{opts.kind, sigma, 0.0};
    OnePhotonAmp f = make_pulse(shape, grid);
    ScatterOneResult one = scatter_one(p, f);
    OperatingPoint op{p, shape, grid, f, one.out.normalized()};
    op.eta = eta_numeric(p, f);
    if (opts.kind == PulseKind::kLorentzian) {
        op.epsilon1 = epsilon1_analytic(p, sigma);
        op.epsilon_b = epsilon_b_analytic(p, sigma);
    } else {
        op.epsilon1 = one.epsilon1;
        op.epsilon_b = epsilon_b_numeric(p, f);
    }
    double e1sq = op.epsilon1 * op.epsilon1;
    op.eta2 = p.gamma_loss > 0 ? e1sq / (op.epsilon_b - e1sq) : 1.0;
    op.matching_residual = std::abs(op.eta - 0.5 * e1sq);
    return op;
}

SorterResult photon_sorter(const FewPhotonState &state, int rail, const OperatingPoint &op,
                           const CircuitOptions &opts) {
    SorterResult r{state};
    r.ancilla = r.state.add_rail({state.rail(rail).label + ".sf", Carrier::kSumFrequency});
    r.state = apply_tls(r.state, rail, op.tls);
    PulseGateSpec gate = make_pulse_gate(op.scattered_mode, opts.efficiency);
    if (auto it = r.state.doubles().find(rail); it != r.state.doubles().end()) {
        double n = it->second.norm_sq();
        if (n > 0) {
            r.pair_leakage_fraction = leakage_metric(gate, it->second) / n;
        }
    }
    SfgResult x = sfg_extract(r.state, rail, r.ancilla, gate, opts.sfg_model);
    r.state = std::move(x.state);
    r.leakage = x.leakage;
    r.matching_residual = op.matching_residual;
    r.matched = op.matching_residual <= opts.matching_tolerance;
    return r;
}

std::string_view to_string(BellState b) {
    switch (b) {
        case BellState::kPsiPlus:
            return "psi+";
        case BellState::kPsiMinus:
            return "psi-";
        case BellState::kPhiPlus:
            return "phi+";
        case BellState::kPhiMinus:
            return "phi-";
    }
    return "?";
}

std::vector<Rail> dual_rail_rails() {
    return {{"u1", Carrier::kOriginal}, {"l1", Carrier::kOriginal}, {"u2", Carrier::kOriginal},
            {"l2", Carrier::kOriginal}};
}

namespace {

constexpr int kU1 = 0;
constexpr int kL1 = 1;
constexpr int kU2 = 2;
constexpr int kL2 = 3;

}  // namespace

FewPhotonState make_bell_state(BellState b, const OnePhotonAmp &mode) {
    FewPhotonState s(mode.grid(), dual_rail_rails());
    const double h = 1 / std::sqrt(2.0);
    switch (b) {
        case BellState::kPsiPlus:
            s.add_photon_pair(kU1, kL2, mode, mode, h);
            s.add_photon_pair(kL1, kU2, mode, mode, h);
            break;
        case BellState::kPsiMinus:
            s.add_photon_pair(kU1, kL2, mode, mode, h);
            s.add_photon_pair(kL1, kU2, mode, mode, -h);
            break;
        case BellState::kPhiPlus:
            s.add_photon_pair(kU1, kU2, mode, mode, h);
            s.add_photon_pair(kL1, kL2, mode, mode, h);
            break;
        case BellState::kPhiMinus:
            s.add_photon_pair(kU1, kU2, mode, mode, h);
            s.add_photon_pair(kL1, kL2, mode, mode, -h);
            break;
    }
    return s;
}

std::vector<std::pair<int, int>> bell_signature(BellState b) {
    switch (b) {
        case BellState::kPsiPlus:
            return {{1, 4}, {2, 3}};
        case BellState::kPsiMinus:
            return {{1, 2}, {3, 4}};
        case BellState::kPhiPlus:
            return {{5, 8}, {6, 7}};
        case BellState::kPhiMinus:
            return {{5, 7}, {6, 8}};
    }
    return {};
}

std::vector<NetworkElement> bell_network() {
    const double q = std::numbers::pi / 4;
    return {
        {"beamsplitter", "u1", "u2", q, 0},
        {"beamsplitter", "l1", "l2", q, 0},
        {"sorter", "u1", "u1.sf", 0, 0},
        {"sorter", "u2", "u2.sf", 0, 0},
        {"sorter", "l1", "l1.sf", 0, 0},
        {"sorter", "l2", "l2.sf", 0, 0},
        {"beamsplitter", "u1", "u2", q, 0},
        {"beamsplitter", "l1", "l2", q, 0},
        {"beamsplitter", "u1", "l1", q, 0},
        {"beamsplitter", "u2", "l2", q, 0},
    };
}

std::vector<std::pair<int, std::string>> bell_detectors() {
    return {{1, "u1.sf"}, {2, "l2.sf"}, {3, "u2.sf"}, {4, "l1.sf"},
            {5, "u1"},    {6, "l1"},    {7, "l2"},    {8, "u2"}};
}

namespace {

void require_two_photons(const FewPhotonState &s, const char *who) {
    if (s.num_rails() != 4) {
        throw std::invalid_argument(std::string(who) + " expects the four dual-rail rails u1, l1, u2, l2");
    }
    double n = s.norm_sq();
    double stray = std::norm(s.vacuum_amp());
    for (const auto &[r, f] : s.singles()) {
        stray += f.norm_sq();
    }
    if (!(n > 0) || stray > 1e-12 * n) {
        throw std::invalid_argument(std::string(who) + " expects a two-photon input");
    }
}

}  // namespace

BellReport bell_analyzer(const FewPhotonState &q1q2, const OperatingPoint &op, const CircuitOptions &opts) {
    require_two_photons(q1q2, "bell_analyzer");
    BellReport rep{{q1q2}};
    FewPhotonState &s = rep.output_state;
    double leakage = 0;
    double pair_leak = 0;
    double residual = 0;
    bool matched = true;
    for (const auto &e : bell_network()) {
        if (e.kind == "beamsplitter") {
            s = beamsplitter(s, s.find_rail(e.rail_a), s.find_rail(e.rail_b), e.theta, e.phi);
        } else {
            SorterResult r = photon_sorter(s, s.find_rail(e.rail_a), op, opts);
            s = std::move(r.state);
            leakage += r.leakage;
            pair_leak = std::max(pair_leak, r.pair_leakage_fraction);
            residual = r.matching_residual;
            matched = matched && r.matched;
        }
    }
    if (!matched) {
        std::ostringstream msg;
        msg << "operating width is off the matching condition by " << residual << "; sorting is imperfect";
        rep.warnings.push_back(msg.str());
    }

    std::map<int, int> detector_of_rail;
    for (const auto &[d, label] : bell_detectors()) {
        detector_of_rail[s.find_rail(label)] = d;
    }
    rep.pattern_probs = detection_distribution(s);
    double two = 0;
    double retained_below = 0;
    for (const auto &[pattern, prob] : rep.pattern_probs) {
        std::vector<int> dets;
        for (int r = 0; r < (int)pattern.size(); r++) {
            for (int k = 0; k < pattern[r]; k++) {
                dets.push_back(detector_of_rail.at(r));
            }
        }
        if (dets.size() < 2) {
            retained_below += prob;
            continue;
        }
        std::sort(dets.begin(), dets.end());
        rep.detector_pairs[{dets[0], dets[1]}] += prob;
        two += prob;
    }
    rep.lost_mass = s.lost_mass();
    rep.below_two = retained_below + rep.lost_mass;

    double best = -1;
    for (BellState b : kBellStates) {
        double mass = 0;
        for (const auto &pair : bell_signature(b)) {
            auto it = rep.detector_pairs.find(pair);
            if (it != rep.detector_pairs.end()) {
                mass += it->second;
            }
        }
        if (mass > best) {
            best = mass;
            rep.identified = b;
        }
    }
    rep.success_prob = best;
    rep.off_target = two - best;
    rep.fidelity_to_target = two > 0 ? best / two : 0;
    rep.metrics["leakage"] = leakage;
    rep.metrics["pair_leakage_fraction"] = pair_leak;
    rep.metrics["matching_residual"] = residual;
    rep.metrics["total_probability"] = s.total_probability();
    return rep;
}

FewPhotonState ns_gate(const FewPhotonState &state, int rail, const OperatingPoint &op, const CircuitOptions &opts) {
    double eta2 = 1.0;
    if (opts.eta2_override) {
        eta2 = *opts.eta2_override;
    } else if (opts.compensate && op.tls.gamma_loss > 0) {
        eta2 = op.eta2;
    }
    if (!(eta2 >= 0 && eta2 <= 1)) {
        throw std::invalid_argument("two-photon compensation eta2 must lie in [0, 1]");
    }
    SorterResult sorted = photon_sorter(state, rail, op, opts);
    FewPhotonState s = component_phase_loss(sorted.state, rail, 2, std::numbers::pi, std::sqrt(eta2));
    PulseGateSpec gate = make_pulse_gate(op.scattered_mode, opts.efficiency);
    s = sfg_reverse(s, sorted.ancilla, rail, gate);
    s = gem_invert(s, rail);
    s = apply_tls(s, rail, op.tls);
    return discard_rail(s, sorted.ancilla);
}

double ns_single_photon_transmission(const OperatingPoint &op, const CircuitOptions &opts) {
    FewPhotonState s(op.grid, {{"a", Carrier::kOriginal}});
    s.add_single(0, op.mode);
    FewPhotonState out = ns_gate(s, 0, op, opts);
    auto it = out.singles().find(0);
    return it == out.singles().end() ? 0.0 : std::abs(inner1(op.mode, it->second));
}

namespace {

const std::array<RailPair, 4> kLogicalPairs = {RailPair{kU1, kU2}, RailPair{kU1, kL2}, RailPair{kL1, kU2},
                                               RailPair{kL1, kL2}};

}  // namespace

std::array<cplx, 4> logical_amplitudes(const FewPhotonState &state, const OnePhotonAmp &mode) {
    JointAmp ff = JointAmp::product(mode, mode);
    std::array<cplx, 4> a{};
    for (size_t k = 0; k < 4; k++) {
        auto it = state.pairs().find(kLogicalPairs[k]);
        if (it != state.pairs().end()) {
            a[k] = inner(ff, it->second);
        }
    }
    return a;
}

FewPhotonState make_logical_state(const std::array<cplx, 4> &amps, const OnePhotonAmp &mode) {
    FewPhotonState s(mode.grid(), dual_rail_rails());
    for (size_t k = 0; k < 4; k++) {
        if (amps[k] != cplx{0, 0}) {
            s.add_photon_pair(kLogicalPairs[k].first, kLogicalPairs[k].second, mode, mode, amps[k]);
        }
    }
    return s;
}

CircuitReport cz_gate(const FewPhotonState &q1q2, const OperatingPoint &op, const CircuitOptions &opts) {
    require_two_photons(q1q2, "cz_gate");
    double n_in = q1q2.norm_sq();
    double off_code = 0;
    for (const auto &[r, psi] : q1q2.doubles()) {
        off_code += psi.norm_sq();
    }
    for (const auto &[rs, phi] : q1q2.pairs()) {
        if (rs == RailPair{kU1, kL1} || rs == RailPair{kU2, kL2}) {
            off_code += phi.norm_sq();
        }
    }
    if (off_code > 1e-12 * n_in) {
        throw std::invalid_argument("cz_gate expects one photon per dual-rail qubit");
    }

    const double q = std::numbers::pi / 4;
    FewPhotonState s = beamsplitter(q1q2, kL1, kU2, q);
    s = ns_gate(s, kL1, op, opts);
    s = ns_gate(s, kU2, op, opts);
    s = beamsplitter(s, kL1, kU2, -q);

    double tau = 1.0;
    if (opts.outer_transmission) {
        tau = *opts.outer_transmission;
    } else if (op.tls.gamma_loss > 0) {
        tau = ns_single_photon_transmission(op, opts);
    }
    if (tau != 1.0) {
        s = loss_channel(s, kU1, tau);
        s = loss_channel(s, kL2, tau);
    }

    FewPhotonState target = q1q2;
    if (auto it = target.mutable_pairs().find({kL1, kU2}); it != target.mutable_pairs().end()) {
        it->second = it->second.scaled(-1.0);
    }

    CircuitReport rep{s};
    auto in_amps = logical_amplitudes(q1q2, op.mode);
    auto out_amps = logical_amplitudes(s, op.mode);
    double w_in = 0;
    double w_out = 0;
    for (size_t k = 0; k < 4; k++) {
        w_in += std::norm(in_amps[k]);
        w_out += std::norm(out_amps[k]);
    }
    rep.success_prob = w_in > 0 ? w_out / w_in : 0;
    rep.fidelity_to_target = fidelity(s, target);
    rep.lost_mass = s.lost_mass();
    rep.pattern_probs = detection_distribution(s);
    double non_dual = 0;
    for (const auto &[pattern, prob] : rep.pattern_probs) {
        bool q1 = pattern[kU1] + pattern[kL1] == 1;
        bool q2 = pattern[kU2] + pattern[kL2] == 1;
        if (!(q1 && q2)) {
            non_dual += prob;
        }
    }
    static const char *names[4] = {"u1u2", "u1l2", "l1u2", "l1l2"};
    for (size_t k = 0; k < 4; k++) {
        rep.metrics[std::string("amp_") + names[k] + "_re"] = out_amps[k].real();
        rep.metrics[std::string("amp_") + names[k] + "_im"] = out_amps[k].imag();
    }
    rep.metrics["non_dual_rail"] = non_dual;
    rep.metrics["outer_transmission"] = tau;
    rep.metrics["total_probability"] = s.total_probability();
    double e1sq = op.epsilon1 * op.epsilon1;
    double eta2 = opts.eta2_override ? *opts.eta2_override
                                     : (opts.compensate && op.tls.gamma_loss > 0 ? op.eta2 : 1.0);
    rep.metrics["eta2"] = eta2;
    rep.metrics["skew"] = std::abs(e1sq - (op.epsilon_b - e1sq) * eta2);
    if (op.matching_residual > opts.matching_tolerance) {
        std::ostringstream msg;
        msg << "operating width is off the matching condition by " << op.matching_residual;
        rep.warnings.push_back(msg.str());
    }
    return rep;
}

SuccessRow success_row(double beta, const MatchingOptions &opts, Branch branch) {
    SuccessRow row;
    row.beta = beta;
    TlsParams p = TlsParams::from_beta(beta);
    try {
        row.sigma = matching_sigma(p, branch, opts);
    } catch (const NoCrossingError &e) {
        row.flagged = true;
        row.note = e.what();
        row.sigma = std::nan("");
        row.epsilon1 = row.epsilon_b = row.bell = row.cz = std::nan("");
        row.loss_two_photon = row.loss_single_pair = std::nan("");
        return row;
    }
    if (opts.kind == PulseKind::kLorentzian) {
        row.epsilon1 = epsilon1_analytic(p, row.sigma);
        row.epsilon_b = epsilon_b_analytic(p, row.sigma);
    } else {
        MatchingTerms m = matching_terms(p, row.sigma, opts);
        row.epsilon1 = m.epsilon1;
        row.epsilon_b = m.epsilon_b;
    }
    double e1sq = row.epsilon1 * row.epsilon1;
    row.bell = row.epsilon_b / 2;
    row.cz = e1sq * e1sq;
    row.loss_two_photon = 1 + e1sq - row.epsilon_b;
    row.loss_single_pair = 1 - e1sq;
    return row;
}

std::vector<SuccessRow> success_curves(const std::vector<double> &betas, const MatchingOptions &opts, Branch branch) {
    std::vector<SuccessRow> rows;
    rows.reserve(betas.size());
    for (double b : betas) {
        rows.push_back(success_row(b, opts, branch));
    }
    return rows;
}

}  // namespace tlsphot
