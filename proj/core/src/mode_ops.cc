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

#include "tlsphot/mode_ops.h"

#include <cmath>
#include <optional>
#include <sstream>

#include "tlsphot/errors.h"

namespace tlsphot {

PulseGateSpec make_pulse_gate(const OnePhotonAmp &mode, double efficiency) {
    if (!(efficiency >= 0 && efficiency <= 1)) {
        throw std::invalid_argument("conversion efficiency must lie in [0, 1]");
    }
    return {mode.normalized(), efficiency};
}

std::string_view to_string(SfgModel m) {
    return m == SfgModel::kNumberSelective ? "number-selective" : "photon-wise";
}

SfgModel parse_sfg_model(std::string_view name) {
    if (name == "number-selective") {
        return SfgModel::kNumberSelective;
    }
    if (name == "photon-wise") {
        return SfgModel::kPhotonWise;
    }
    throw std::invalid_argument("unknown conversion model '" + std::string(name) +
                                "' (expected number-selective or photon-wise)");
}

namespace {

std::vector<ModeTransfer> gate_transfers(int from, int stay, int move, const PulseGateSpec &spec) {
    const OnePhotonAmp &g = spec.pump_mode;
    double e = spec.efficiency;
    return {
        {from, stay, SpectralOp::identity()},
        {from, stay, SpectralOp::projector(g, g, std::sqrt(1 - e) - 1)},
        {from, move, SpectralOp::projector(g, g, std::sqrt(e))},
    };
}

}  // namespace

SfgResult sfg_extract(const FewPhotonState &state, int signal, int ancilla, const PulseGateSpec &spec,
                      SfgModel model) {
    require_same_grid(state.grid(), spec.pump_mode.grid());
    if (signal == ancilla) {
        throw std::invalid_argument("signal and ancilla must be different rails");
    }
    if (!state.is_empty_rail(ancilla)) {
        throw ContractViolation("ancilla rail '" + state.rail(ancilla).label + "' is not empty");
    }
    FewPhotonState in = state;
    std::optional<TwoPhotonAmp> kept;
    if (model == SfgModel::kNumberSelective) {
        auto it = in.mutable_doubles().find(signal);
        if (it != in.mutable_doubles().end()) {
            TwoPhotonAmp gg = product_state(spec.pump_mode);
            cplx c = inner2(gg, it->second);
            kept = it->second - gg.scaled(c);
            it->second = gg.scaled(c);
            if (c == cplx{0, 0}) {
                in.mutable_doubles().erase(it);
            }
        }
    }
    FewPhotonState out = apply_mode_map(in, gate_transfers(signal, signal, ancilla, spec));
    if (kept && !kept->empty()) {
        out.add_double(signal, *kept);
    }
    double leak = 0;
    RailPair key{std::min(signal, ancilla), std::max(signal, ancilla)};
    if (auto it = out.mutable_pairs().find(key); it != out.mutable_pairs().end()) {
        leak = it->second.norm_sq();
        out.mutable_pairs().erase(it);
        out.add_lost_mass(leak);
    }
    return {std::move(out), leak};
}

FewPhotonState sfg_reverse(const FewPhotonState &state, int ancilla, int signal, const PulseGateSpec &spec,
                           double tol) {
    require_same_grid(state.grid(), spec.pump_mode.grid());
    const OnePhotonAmp &g = spec.pump_mode;
    SpectralOp outside = SpectralOp::projector(g, g, -1.0);
    double stray = 0;
    if (auto it = state.singles().find(ancilla); it != state.singles().end()) {
        stray += (it->second + outside.apply(it->second)).norm_sq();
    }
    for (const auto &[rs, phi] : state.pairs()) {
        if (rs.first == ancilla || rs.second == ancilla) {
            JointAmp q = phi;
            q.add(rs.first == ancilla ? apply_pair(outside, SpectralOp::identity(), phi)
                                      : apply_pair(SpectralOp::identity(), outside, phi));
            q.compress();
            stray += q.norm_sq();
        }
    }
    if (auto it = state.doubles().find(ancilla); it != state.doubles().end()) {
        TwoPhotonAmp gg = product_state(g);
        stray += (it->second - gg.scaled(inner2(gg, it->second))).norm_sq();
    }
    double scale = std::max(state.norm_sq(), 1e-300);
    if (stray > tol * scale) {
        std::ostringstream msg;
        msg << "ancilla rail '" << state.rail(ancilla).label << "' holds " << stray
            << " probability outside the pump mode";
        throw ContractViolation(msg.str());
    }
    return apply_mode_map(state, gate_transfers(ancilla, ancilla, signal, spec));
}

FewPhotonState gem_invert(const FewPhotonState &state, int rail) {
    if (!state.grid()->symmetric()) {
        throw std::invalid_argument("time reversal needs a grid symmetric about zero detuning");
    }
    return apply_mode_map(state, {{rail, rail, SpectralOp::reflection()}});
}

FewPhotonState component_phase_loss(const FewPhotonState &state, int rail, int n_photons, double phase,
                                    double amp_transmission) {
    if (!(amp_transmission >= 0 && amp_transmission <= 1)) {
        throw std::invalid_argument("amplitude transmission must lie in [0, 1]");
    }
    if (n_photons < 0 || n_photons > 2) {
        throw std::invalid_argument("photon number must be 0, 1 or 2");
    }
    state.rail(rail);
    cplx factor = std::exp(cplx{0, phase}) * std::pow(amp_transmission, n_photons);
    double keep = std::norm(factor);
    FewPhotonState out = state;
    double removed = 0;
    auto touches = [rail](const RailPair &rs) { return rs.first == rail || rs.second == rail; };
    if (n_photons == 0) {
        removed += std::norm(out.vacuum_amp()) * (1 - keep);
        out.set_vacuum_amp(out.vacuum_amp() * factor);
    }
    for (auto &[r, f] : out.mutable_singles()) {
        if ((r == rail ? 1 : 0) == n_photons) {
            removed += f.norm_sq() * (1 - keep);
            f = f.scaled(factor);
        }
    }
    for (auto &[rs, phi] : out.mutable_pairs()) {
        if ((touches(rs) ? 1 : 0) == n_photons) {
            removed += phi.norm_sq() * (1 - keep);
            phi = phi.scaled(factor);
        }
    }
    for (auto &[r, psi] : out.mutable_doubles()) {
        if ((r == rail ? 2 : 0) == n_photons) {
            removed += psi.norm_sq() * (1 - keep);
            psi = psi.scaled(factor);
        }
    }
    out.add_lost_mass(removed);
    return out;
}

double leakage_metric(const PulseGateSpec &spec, const TwoPhotonAmp &psi) {
    const OnePhotonAmp &g = spec.pump_mode;
    OnePhotonAmp y = contract_first(g, psi.joint());
    OnePhotonAmp perp = y - g.scaled(inner1(g, y));
    return 2 * perp.norm_sq();
}

}  // namespace tlsphot
