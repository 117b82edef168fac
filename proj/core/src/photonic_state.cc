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

#include "tlsphot/photonic_state.h"

#include <cmath>
#include <set>
#include <stdexcept>

#include "tlsphot/errors.h"

namespace tlsphot {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void accumulate(std::map<int, OnePhotonAmp> &m, int r, const OnePhotonAmp &f, cplx coef) {
    auto it = m.find(r);
    if (it == m.end()) {
        m.emplace(r, f.scaled(coef));
    } else {
        it->second = it->second + f.scaled(coef);
    }
}

void accumulate(std::map<RailPair, JointAmp> &m, int r, int s, const JointAmp &phi, cplx coef) {
    if (r > s) {
        accumulate(m, s, r, phi.swapped(), coef);
        return;
    }
    auto it = m.find({r, s});
    if (it == m.end()) {
        it = m.emplace(RailPair{r, s}, JointAmp(phi.grid())).first;
    }
    it->second.add(phi, coef);
}

void accumulate(std::map<int, JointAmp> &m, int r, const JointAmp &psi, cplx coef) {
    auto it = m.find(r);
    if (it == m.end()) {
        it = m.emplace(r, JointAmp(psi.grid())).first;
    }
    it->second.add(psi, coef);
}

template <typename Map>
void drop_empty(Map &m) {
    for (auto it = m.begin(); it != m.end();) {
        if (it->second.empty()) {
            it = m.erase(it);
        } else {
            ++it;
        }
    }
}

}  // namespace

FewPhotonState::FewPhotonState(GridPtr grid, std::vector<Rail> rails) : grid_(std::move(grid)), rails_(std::move(rails)) {
    if (!grid_) {
        throw std::invalid_argument("state needs a grid");
    }
}

FewPhotonState FewPhotonState::vacuum(GridPtr grid, std::vector<Rail> rails) {
    FewPhotonState s(std::move(grid), std::move(rails));
    s.vacuum_ = 1.0;
    return s;
}

void FewPhotonState::check_rail(int r) const {
    if (r < 0 || r >= num_rails()) {
        throw std::out_of_range("rail index " + std::to_string(r) + " out of range");
    }
}

const Rail &FewPhotonState::rail(int r) const {
    check_rail(r);
    return rails_[r];
}

int FewPhotonState::add_rail(Rail rail) {
    rails_.push_back(std::move(rail));
    return num_rails() - 1;
}

int FewPhotonState::find_rail(const std::string &label) const {
    for (int r = 0; r < num_rails(); r++) {
        if (rails_[r].label == label) {
            return r;
        }
    }
    throw std::out_of_range("no rail labelled '" + label + "'");
}

void FewPhotonState::add_single(int r, const OnePhotonAmp &f, cplx coef) {
    check_rail(r);
    require_same_grid(grid_, f.grid());
    accumulate(singles_, r, f, coef);
}

void FewPhotonState::add_pair(int r, int s, const JointAmp &phi, cplx coef) {
    check_rail(r);
    check_rail(s);
    require_same_grid(grid_, phi.grid());
    if (r == s) {
        throw std::invalid_argument("add_pair needs two distinct rails; use add_double");
    }
    accumulate(pairs_, r, s, phi, coef);
    pairs_.find({std::min(r, s), std::max(r, s)})->second.compress();
}

void FewPhotonState::add_double(int r, const TwoPhotonAmp &psi, cplx coef) {
    check_rail(r);
    require_same_grid(grid_, psi.grid());
    auto it = doubles_.find(r);
    if (it == doubles_.end()) {
        doubles_.emplace(r, psi.scaled(coef));
    } else {
        it->second = it->second + psi.scaled(coef);
    }
}

void FewPhotonState::add_two_photons(int r, const OnePhotonAmp &f, cplx coef) {
    add_double(r, product_state(f), coef);
}

void FewPhotonState::add_photon_pair(int r, int s, const OnePhotonAmp &f, const OnePhotonAmp &g, cplx coef) {
    if (r != s) {
        add_pair(r, s, JointAmp::product(f, g), coef);
        return;
    }
    JointAmp psi = JointAmp::product(f, g);
    add_double(r, TwoPhotonAmp::symmetrized(psi), coef * std::sqrt(2.0));
}

double FewPhotonState::norm_sq() const {
    double n = std::norm(vacuum_);
    for (const auto &[r, f] : singles_) {
        n += f.norm_sq();
    }
    for (const auto &[rs, phi] : pairs_) {
        n += phi.norm_sq();
    }
    for (const auto &[r, psi] : doubles_) {
        n += psi.norm_sq();
    }
    return n;
}

double FewPhotonState::rail_weight(int r) const {
    double n = 0;
    if (auto it = singles_.find(r); it != singles_.end()) {
        n += it->second.norm_sq();
    }
    for (const auto &[rs, phi] : pairs_) {
        if (rs.first == r || rs.second == r) {
            n += phi.norm_sq();
        }
    }
    if (auto it = doubles_.find(r); it != doubles_.end()) {
        n += it->second.norm_sq();
    }
    return n;
}

bool FewPhotonState::is_empty_rail(int r) const {
    if (singles_.count(r) || doubles_.count(r)) {
        return false;
    }
    for (const auto &[rs, phi] : pairs_) {
        if (rs.first == r || rs.second == r) {
            return false;
        }
    }
    return true;
}

void FewPhotonState::compress() {
    for (auto &[rs, phi] : pairs_) {
        phi.compress();
    }
    drop_empty(pairs_);
    for (auto it = doubles_.begin(); it != doubles_.end();) {
        if (it->second.empty()) {
            it = doubles_.erase(it);
        } else {
            ++it;
        }
    }
}

FewPhotonState apply_mode_map(const FewPhotonState &state, const std::vector<ModeTransfer> &map) {
    std::map<int, std::vector<const ModeTransfer *>> by_source;
    for (const auto &t : map) {
        state.rail(t.from);
        state.rail(t.to);
        by_source[t.from].push_back(&t);
    }
    std::vector<ModeTransfer> identities;
    identities.reserve(state.num_rails());
    for (int r = 0; r < state.num_rails(); r++) {
        identities.push_back({r, r, SpectralOp::identity()});
    }
    auto sources = [&](int r) {
        auto it = by_source.find(r);
        if (it != by_source.end()) {
            return it->second;
        }
        return std::vector<const ModeTransfer *>{&identities[r]};
    };

    FewPhotonState out(state.grid(), state.rails());
    out.set_vacuum_amp(state.vacuum_amp());
    out.add_lost_mass(state.lost_mass());

    auto &singles = out.mutable_singles();
    for (const auto &[r, f] : state.singles()) {
        for (const auto *t : sources(r)) {
            accumulate(singles, t->to, t->op.apply(f), 1.0);
        }
    }

    std::map<RailPair, JointAmp> pairs;
    std::map<int, JointAmp> doubles;
    for (const auto &[rs, phi] : state.pairs()) {
        auto [r, s] = rs;
        if (!by_source.count(r) && !by_source.count(s)) {
            accumulate(pairs, r, s, phi, 1.0);
            continue;
        }
        for (const auto *t1 : sources(r)) {
            for (const auto *t2 : sources(s)) {
                JointAmp chi = apply_pair(t1->op, t2->op, phi);
                if (chi.empty()) {
                    continue;
                }
                if (t1->to != t2->to) {
                    accumulate(pairs, t1->to, t2->to, chi, 1.0);
                } else {
                    accumulate(doubles, t1->to, chi, kInvSqrt2);
                    accumulate(doubles, t1->to, chi.swapped(), kInvSqrt2);
                }
            }
        }
    }
    for (const auto &[r, psi] : state.doubles()) {
        if (!by_source.count(r)) {
            accumulate(doubles, r, psi.joint(), 1.0);
            continue;
        }
        for (const auto *t1 : sources(r)) {
            for (const auto *t2 : sources(r)) {
                JointAmp chi = apply_pair(t1->op, t2->op, psi.joint());
                if (chi.empty()) {
                    continue;
                }
                if (t1->to != t2->to) {
                    accumulate(pairs, t1->to, t2->to, chi, kInvSqrt2);
                } else {
                    accumulate(doubles, t1->to, chi, 1.0);
                }
            }
        }
    }
    for (auto &[rs, phi] : pairs) {
        phi.compress();
        if (!phi.empty()) {
            out.mutable_pairs().emplace(rs, std::move(phi));
        }
    }
    for (auto &[r, psi] : doubles) {
        psi.compress();
        if (!psi.empty()) {
            out.mutable_doubles().emplace(r, TwoPhotonAmp::trusted(std::move(psi)));
        }
    }
    return out;
}

FewPhotonState beamsplitter(const FewPhotonState &state, int rail_i, int rail_j, double theta, double phi) {
    if (rail_i == rail_j) {
        throw std::invalid_argument("beamsplitter needs two distinct rails");
    }
    if (state.rail(rail_i).carrier != state.rail(rail_j).carrier) {
        throw CarrierMismatchError("cannot interfere rails '" + state.rail(rail_i).label + "' and '" +
                                   state.rail(rail_j).label + "' on different carriers");
    }
    const cplx i{0, 1};
    double c = std::cos(theta);
    double s = std::sin(theta);
    std::vector<ModeTransfer> map{
        {rail_i, rail_i, SpectralOp::scale(c)},
        {rail_i, rail_j, SpectralOp::scale(std::exp(i * phi) * s)},
        {rail_j, rail_i, SpectralOp::scale(-std::exp(-i * phi) * s)},
        {rail_j, rail_j, SpectralOp::scale(c)},
    };
    return apply_mode_map(state, map);
}

FewPhotonState phase_shift(const FewPhotonState &state, int rail, double phase) {
    return apply_mode_map(state, {{rail, rail, SpectralOp::scale(std::exp(cplx{0, phase}))}});
}

FewPhotonState loss_channel(const FewPhotonState &state, int rail, double amp_transmission) {
    if (!(amp_transmission >= 0 && amp_transmission <= 1)) {
        throw std::invalid_argument("amplitude transmission must lie in [0, 1]");
    }
    state.rail(rail);
    double t = amp_transmission;
    FewPhotonState out = state;
    double removed = 0;
    if (auto it = out.mutable_singles().find(rail); it != out.mutable_singles().end()) {
        removed += it->second.norm_sq() * (1 - t * t);
        it->second = it->second.scaled(t);
    }
    for (auto &[rs, phi] : out.mutable_pairs()) {
        if (rs.first == rail || rs.second == rail) {
            removed += phi.norm_sq() * (1 - t * t);
            phi = phi.scaled(t);
        }
    }
    if (auto it = out.mutable_doubles().find(rail); it != out.mutable_doubles().end()) {
        removed += it->second.norm_sq() * (1 - t * t * t * t);
        it->second = it->second.scaled(t * t);
    }
    out.add_lost_mass(removed);
    out.compress();
    return out;
}

FewPhotonState apply_tls(const FewPhotonState &state, int rail, const TlsParams &p) {
    p.validate();
    double before = state.rail_weight(rail);
    SpectralOp t = SpectralOp::diagonal(transfer_samples(p, *state.grid()));
    FewPhotonState out = state;
    if (auto it = out.mutable_singles().find(rail); it != out.mutable_singles().end()) {
        it->second = t.apply(it->second);
    }
    for (auto &[rs, phi] : out.mutable_pairs()) {
        if (rs.first == rail) {
            phi = apply_pair(t, SpectralOp::identity(), phi);
        } else if (rs.second == rail) {
            phi = apply_pair(SpectralOp::identity(), t, phi);
        }
    }
    if (auto it = out.mutable_doubles().find(rail); it != out.mutable_doubles().end()) {
        it->second = scatter_two(p, it->second);
    }
    out.compress();
    if (p.gamma_loss > 0) {
        out.add_lost_mass(std::max(0.0, before - out.rail_weight(rail)));
    }
    return out;
}

FewPhotonState discard_rail(const FewPhotonState &state, int rail) {
    state.rail(rail);
    auto shift = [rail](int r) { return r > rail ? r - 1 : r; };
    std::vector<Rail> rails = state.rails();
    rails.erase(rails.begin() + rail);
    FewPhotonState out(state.grid(), rails);
    out.set_vacuum_amp(state.vacuum_amp());
    out.add_lost_mass(state.lost_mass() + state.rail_weight(rail));
    for (const auto &[r, f] : state.singles()) {
        if (r != rail) {
            out.mutable_singles().emplace(shift(r), f);
        }
    }
    for (const auto &[rs, phi] : state.pairs()) {
        if (rs.first != rail && rs.second != rail) {
            out.mutable_pairs().emplace(RailPair{shift(rs.first), shift(rs.second)}, phi);
        }
    }
    for (const auto &[r, psi] : state.doubles()) {
        if (r != rail) {
            out.mutable_doubles().emplace(shift(r), psi);
        }
    }
    return out;
}

DetectionPattern make_pattern(int num_rails, std::initializer_list<int> occupied) {
    DetectionPattern p(num_rails, 0);
    for (int r : occupied) {
        if (r < 0 || r >= num_rails) {
            throw std::out_of_range("pattern rail out of range");
        }
        p[r]++;
    }
    return p;
}

double project_detection(const FewPhotonState &state, const DetectionPattern &pattern) {
    if ((int)pattern.size() != state.num_rails()) {
        throw std::invalid_argument("pattern length must equal the number of rails");
    }
    std::vector<int> occupied;
    for (int r = 0; r < (int)pattern.size(); r++) {
        if (pattern[r] < 0 || pattern[r] > 2) {
            throw std::invalid_argument("pattern counts must be 0, 1 or 2");
        }
        for (int k = 0; k < pattern[r]; k++) {
            occupied.push_back(r);
        }
    }
    if (occupied.empty()) {
        return std::norm(state.vacuum_amp());
    }
    if (occupied.size() == 1) {
        auto it = state.singles().find(occupied[0]);
        return it == state.singles().end() ? 0.0 : it->second.norm_sq();
    }
    if (occupied.size() == 2) {
        if (occupied[0] == occupied[1]) {
            auto it = state.doubles().find(occupied[0]);
            return it == state.doubles().end() ? 0.0 : it->second.norm_sq();
        }
        auto it = state.pairs().find({occupied[0], occupied[1]});
        return it == state.pairs().end() ? 0.0 : it->second.norm_sq();
    }
    return 0.0;
}

std::map<DetectionPattern, double> detection_distribution(const FewPhotonState &state) {
    int n = state.num_rails();
    std::map<DetectionPattern, double> d;
    if (state.vacuum_amp() != cplx{0, 0}) {
        d[DetectionPattern(n, 0)] = std::norm(state.vacuum_amp());
    }
    for (const auto &[r, f] : state.singles()) {
        DetectionPattern p(n, 0);
        p[r] = 1;
        d[p] += f.norm_sq();
    }
    for (const auto &[rs, phi] : state.pairs()) {
        DetectionPattern p(n, 0);
        p[rs.first] = 1;
        p[rs.second] = 1;
        d[p] += phi.norm_sq();
    }
    for (const auto &[r, psi] : state.doubles()) {
        DetectionPattern p(n, 0);
        p[r] = 2;
        d[p] += psi.norm_sq();
    }
    return d;
}

cplx state_inner(const FewPhotonState &a, const FewPhotonState &b) {
    require_same_grid(a.grid(), b.grid());
    if (a.num_rails() != b.num_rails()) {
        throw std::invalid_argument("states have different rail counts");
    }
    cplx acc = std::conj(a.vacuum_amp()) * b.vacuum_amp();
    for (const auto &[r, f] : a.singles()) {
        if (auto it = b.singles().find(r); it != b.singles().end()) {
            acc += inner1(f, it->second);
        }
    }
    for (const auto &[rs, phi] : a.pairs()) {
        if (auto it = b.pairs().find(rs); it != b.pairs().end()) {
            acc += inner(phi, it->second);
        }
    }
    for (const auto &[r, psi] : a.doubles()) {
        if (auto it = b.doubles().find(r); it != b.doubles().end()) {
            acc += inner2(psi, it->second);
        }
    }
    return acc;
}

double fidelity(const FewPhotonState &state, const FewPhotonState &target) {
    double ns = state.norm_sq();
    double nt = target.norm_sq();
    if (ns <= 0 || nt <= 0) {
        return 0;
    }
    return std::norm(state_inner(target, state)) / (ns * nt);
}

}  // namespace tlsphot
