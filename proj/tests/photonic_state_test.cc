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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "tlsphot/errors.h"
#include "tlsphot/photonic_state.h"

using namespace tlsphot;

namespace {

constexpr double kPi = std::numbers::pi;
const TlsParams kLossless{1.0, 0.0};

struct Fixture {
    GridPtr grid = grid_for_pulse({}, 1.0, 2.0);
    OnePhotonAmp f = make_pulse({PulseKind::kLorentzian, 1.0, 0.0}, grid);
    OnePhotonAmp g = make_pulse({PulseKind::kGaussian, 0.6, 2.0}, grid);

    FewPhotonState empty(int rails) const {
        std::vector<Rail> r;
        for (int k = 0; k < rails; k++) {
            r.push_back({"r" + std::to_string(k)});
        }
        return FewPhotonState::vacuum(grid, r);
    }
};

}  // namespace

TEST(FewPhotonState, VacuumAndBookkeeping) {
    Fixture fx;
    FewPhotonState s = fx.empty(2);
    EXPECT_DOUBLE_EQ(s.total_probability(), 1.0);
    EXPECT_DOUBLE_EQ(project_detection(s, make_pattern(2, {})), 1.0);
    EXPECT_EQ(s.find_rail("r1"), 1);
    EXPECT_THROW(s.find_rail("nope"), std::out_of_range);
    EXPECT_TRUE(s.is_empty_rail(0));
}

TEST(FewPhotonState, PhotonPairOnOneRailCarriesBosonicFactor) {
    Fixture fx;
    FewPhotonState s = fx.empty(2);
    s.set_vacuum_amp(0);
    s.add_photon_pair(0, 0, fx.f, fx.f);
    // a†a† on the same mode gives norm 2.
    EXPECT_NEAR(s.norm_sq(), 2.0, 1e-12);
    FewPhotonState t = fx.empty(2);
    t.set_vacuum_amp(0);
    t.add_two_photons(0, fx.f);
    EXPECT_NEAR(t.norm_sq(), 1.0, 1e-12);
}

TEST(Beamsplitter, ZeroAngleIsIdentity) {
    Fixture fx;
    FewPhotonState s = fx.empty(2);
    s.set_vacuum_amp(0.6);
    s.add_single(0, fx.f, 0.8);
    FewPhotonState out = beamsplitter(s, 0, 1, 0.0);
    EXPECT_NEAR(fidelity(out, s), 1.0, 1e-14);
    EXPECT_NEAR(project_detection(out, make_pattern(2, {0})), 0.64, 1e-12);
}

TEST(Beamsplitter, HongOuMandelDip) {
    Fixture fx;
    FewPhotonState s = fx.empty(2);
    s.set_vacuum_amp(0);
    s.add_photon_pair(0, 1, fx.f, fx.f);
    FewPhotonState out = beamsplitter(s, 0, 1, kPi / 4);
    EXPECT_LT(project_detection(out, make_pattern(2, {0, 1})), 1e-28);
    EXPECT_NEAR(project_detection(out, make_pattern(2, {0, 0})), 0.5, 1e-12);
    EXPECT_NEAR(project_detection(out, make_pattern(2, {1, 1})), 0.5, 1e-12);
    // Distinguishable photons do not bunch completely.
    FewPhotonState d = fx.empty(2);
    d.set_vacuum_amp(0);
    d.add_photon_pair(0, 1, fx.f, fx.g);
    double overlap = std::norm(inner1(fx.f, fx.g));
    EXPECT_NEAR(project_detection(beamsplitter(d, 0, 1, kPi / 4), make_pattern(2, {0, 1})), (1 - overlap) / 2, 1e-12);
}

TEST(Beamsplitter, CascadeSwapsRails) {
    Fixture fx;
    FewPhotonState s = fx.empty(2);
    s.set_vacuum_amp(0);
    s.add_single(0, fx.f, cplx{0.6, 0.0});
    s.add_single(1, fx.g, cplx{0.0, 0.8});
    FewPhotonState out = phase_shift(beamsplitter(beamsplitter(s, 0, 1, kPi / 4), 0, 1, kPi / 4), 0, kPi);
    FewPhotonState swapped = fx.empty(2);
    swapped.set_vacuum_amp(0);
    swapped.add_single(1, fx.f, cplx{0.6, 0.0});
    swapped.add_single(0, fx.g, cplx{0.0, 0.8});
    EXPECT_NEAR(fidelity(out, swapped), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(state_inner(swapped, out) - 1.0), 0.0, 1e-12);
}

TEST(Beamsplitter, InverseAngleUndoesTwoPhotonMixing) {
    Fixture fx;
    FewPhotonState s = fx.empty(3);
    s.set_vacuum_amp(0.3);
    s.add_single(2, fx.f, 0.4);
    s.add_photon_pair(0, 1, fx.f, fx.g, 0.5);
    s.add_two_photons(0, fx.g, cplx{0.2, 0.5});
    FewPhotonState back = beamsplitter(beamsplitter(s, 0, 1, 0.37, 0.2), 0, 1, -0.37, 0.2);
    EXPECT_NEAR(fidelity(back, s), 1.0, 1e-12);
    EXPECT_NEAR(back.norm_sq(), s.norm_sq(), 1e-12);
}

TEST(Beamsplitter, CarrierMismatchRejected) {
    Fixture fx;
    FewPhotonState s = FewPhotonState::vacuum(fx.grid, {{"a"}, {"a.sf", Carrier::kSumFrequency}});
    EXPECT_THROW(beamsplitter(s, 0, 1, kPi / 4), CarrierMismatchError);
}

TEST(Beamsplitter, CommutesWithRailSymmetricDiagonalMap) {
    Fixture fx;
    FewPhotonState s = fx.empty(2);
    s.set_vacuum_amp(0);
    s.add_single(0, fx.f, 0.6);
    s.add_single(1, fx.g, 0.8);
    TlsParams p{1.0, 0.0};
    FewPhotonState a = apply_tls(apply_tls(beamsplitter(s, 0, 1, 0.7), 0, p), 1, p);
    FewPhotonState b = beamsplitter(apply_tls(apply_tls(s, 0, p), 1, p), 0, 1, 0.7);
    EXPECT_NEAR(fidelity(a, b), 1.0, 1e-12);
}

TEST(LossChannel, SinglesAndDoubles) {
    Fixture fx;
    FewPhotonState s = fx.empty(2);
    s.set_vacuum_amp(0);
    s.add_single(0, fx.f, 0.6);
    s.add_two_photons(1, fx.f, 0.8);
    FewPhotonState same = loss_channel(s, 0, 1.0);
    EXPECT_NEAR(fidelity(same, s), 1.0, 1e-14);
    EXPECT_DOUBLE_EQ(same.lost_mass(), 0.0);
    FewPhotonState a = loss_channel(s, 0, 0.5);
    EXPECT_NEAR(project_detection(a, make_pattern(2, {0})), 0.36 * 0.25, 1e-12);
    EXPECT_NEAR(a.lost_mass(), 0.36 * 0.75, 1e-12);
    FewPhotonState b = loss_channel(s, 1, 0.5);
    EXPECT_NEAR(project_detection(b, make_pattern(2, {1, 1})), 0.64 / 16, 1e-12);
    EXPECT_NEAR(b.total_probability(), 1.0, 1e-12);
    EXPECT_THROW(loss_channel(s, 0, 1.5), std::invalid_argument);
    EXPECT_THROW(loss_channel(s, 0, -0.1), std::invalid_argument);
}

TEST(ApplyTls, LosslessConservesProbability) {
    Fixture fx;
    FewPhotonState s = fx.empty(2);
    s.set_vacuum_amp(0.5);
    s.add_single(0, fx.f, 0.5);
    s.add_two_photons(0, fx.f, std::sqrt(0.25));
    s.add_photon_pair(0, 1, fx.f, fx.g, std::sqrt(0.25));
    FewPhotonState out = apply_tls(s, 0, kLossless);
    EXPECT_NEAR(out.total_probability(), 1.0, 5e-4);
    EXPECT_DOUBLE_EQ(out.lost_mass(), 0.0);
}

TEST(ApplyTls, LossySinglePhotonDropsByOneMinusEpsilon1) {
    Fixture fx;
    TlsParams p = TlsParams::from_beta(0.9);
    FewPhotonState s = fx.empty(1);
    s.set_vacuum_amp(0);
    s.add_single(0, fx.f);
    FewPhotonState out = apply_tls(s, 0, p);
    double e1 = epsilon1_analytic(p, 1.0);
    // Window of 27 linewidths: the truncated Lorentzian tail sets the tolerance.
    EXPECT_NEAR(out.norm_sq(), e1, 1e-5);
    EXPECT_NEAR(out.lost_mass(), 1 - e1, 1e-5);
    EXPECT_NEAR(out.total_probability(), 1.0, 1e-12);
}

TEST(ApplyTls, MatchedLossyPairSurvivesInOrthogonalMode) {
    TlsParams p = TlsParams::from_beta(0.95);
    MatchingOptions opts;
    double sigma = matching_sigma(p, Branch::kUpper, opts);
    GridPtr grid = grid_for_pulse({}, sigma, 0.0, p.gamma_wg, p.gamma_loss);
    OnePhotonAmp f = make_pulse({PulseKind::kLorentzian, sigma, 0.0}, grid);
    FewPhotonState s = FewPhotonState::vacuum(grid, {{"a"}});
    s.set_vacuum_amp(0);
    s.add_two_photons(0, f);
    FewPhotonState out = apply_tls(s, 0, p);
    double e1 = epsilon1_analytic(p, sigma);
    double eb = epsilon_b_analytic(p, sigma);
    TwoPhotonAmp image = product_state(scatter_one(p, f).out.normalized());
    const TwoPhotonAmp &psi = out.doubles().at(0);
    EXPECT_NEAR(std::abs(inner2(image, psi)), 0.0, 1e-4);
    EXPECT_NEAR(psi.norm_sq(), eb - e1 * e1, 1e-4);
    EXPECT_NEAR(out.total_probability(), 1.0, 1e-9);
}

TEST(ProjectDetection, SinglePhotonAndDistribution) {
    Fixture fx;
    FewPhotonState s = fx.empty(3);
    s.set_vacuum_amp(0);
    s.add_single(0, fx.f);
    EXPECT_NEAR(project_detection(s, make_pattern(3, {0})), 1.0, 1e-12);
    EXPECT_DOUBLE_EQ(project_detection(s, make_pattern(3, {1})), 0.0);
    auto dist = detection_distribution(beamsplitter(s, 0, 2, 0.3));
    double total = 0;
    for (auto &[pat, prob] : dist) {
        total += prob;
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
    EXPECT_NEAR(dist[make_pattern(3, {2})], std::pow(std::sin(0.3), 2), 1e-12);
    EXPECT_THROW(project_detection(s, make_pattern(2, {0})), std::invalid_argument);
}

TEST(Fidelity, SelfOrthogonalAndGridMismatch) {
    Fixture fx;
    FewPhotonState a = fx.empty(1);
    a.set_vacuum_amp(0);
    a.add_single(0, fx.f);
    EXPECT_NEAR(fidelity(a, a), 1.0, 1e-14);
    OnePhotonAmp odd = fx.g - fx.f.scaled(inner1(fx.f, fx.g));
    FewPhotonState b = fx.empty(1);
    b.set_vacuum_amp(0);
    b.add_single(0, odd.normalized());
    EXPECT_LT(fidelity(a, b), 1e-20);
    GridPtr other = make_grid(10.0, 201);
    FewPhotonState c = FewPhotonState::vacuum(other, {{"r0"}});
    EXPECT_THROW(fidelity(a, c), GridMismatchError);
}

TEST(DiscardRail, TracesOutAncilla) {
    Fixture fx;
    FewPhotonState s = FewPhotonState::vacuum(fx.grid, {{"a"}, {"b"}});
    s.set_vacuum_amp(std::sqrt(0.5));
    s.add_single(1, fx.f, std::sqrt(0.5));
    FewPhotonState d = discard_rail(s, 1);
    EXPECT_EQ(d.num_rails(), 1);
    EXPECT_NEAR(d.total_probability(), 1.0, 1e-12);
}
