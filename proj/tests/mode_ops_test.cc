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

#include "golden.h"
#include "tlsphot/errors.h"
#include "tlsphot/mode_ops.h"

using namespace tlsphot;

namespace {

constexpr double kPi = std::numbers::pi;
const TlsParams kLossless{1.0, 0.0};

struct Gate {
    double sigma;
    GridPtr grid;
    OnePhotonAmp f;
    OnePhotonAmp fp;
    PulseGateSpec gate;

    explicit Gate(double s, double efficiency = 1.0)
        : sigma(s),
          grid(grid_for_pulse({}, s)),
          f(make_pulse({PulseKind::kLorentzian, s, 0.0}, grid)),
          fp(scatter_one(kLossless, f).out.normalized()),
          gate(make_pulse_gate(fp, efficiency)) {
    }

    FewPhotonState rails() const {
        return FewPhotonState::vacuum(grid, {{"s"}, {"s.sf", Carrier::kSumFrequency}});
    }

    FewPhotonState one(const OnePhotonAmp &g, cplx vac = 0.0, cplx amp = 1.0) const {
        FewPhotonState st = rails();
        st.set_vacuum_amp(vac);
        st.add_single(0, g, amp);
        return st;
    }
};

}  // namespace

TEST(SfgExtract, PumpModePhotonMovesToAncilla) {
    Gate s(golden::kUpperMatchingSigma);
    SfgResult r = sfg_extract(s.one(s.fp), 0, 1, s.gate);
    EXPECT_NEAR(project_detection(r.state, make_pattern(2, {1})), 1.0, 1e-12);
    EXPECT_LT(r.state.rail_weight(0), 1e-24);
    EXPECT_DOUBLE_EQ(r.leakage, 0.0);
}

TEST(SfgExtract, OrthogonalModeIsUntouched) {
    Gate s(golden::kUpperMatchingSigma);
    OnePhotonAmp h = make_pulse({PulseKind::kGaussian, 0.8, 1.0}, s.grid);
    OnePhotonAmp perp = (h - s.fp.scaled(inner1(s.fp, h))).normalized();
    FewPhotonState in = s.one(perp, 0.6, 0.8);
    SfgResult r = sfg_extract(in, 0, 1, s.gate);
    EXPECT_LT(r.state.rail_weight(1), 1e-24);
    EXPECT_NEAR(fidelity(r.state, in), 1.0, 1e-12);
    EXPECT_NEAR(std::norm(r.state.vacuum_amp()), 0.36, 1e-15);
}

TEST(SfgExtract, OccupiedAncillaViolatesContract) {
    Gate s(1.0);
    FewPhotonState in = s.rails();
    in.set_vacuum_amp(0);
    in.add_single(1, s.fp);
    EXPECT_THROW(sfg_extract(in, 0, 1, s.gate), ContractViolation);
}

TEST(SfgExtract, ConservesProbabilityForMixedInput) {
    Gate s(golden::kUpperMatchingSigma, 0.7);
    FewPhotonState in = s.rails();
    in.set_vacuum_amp(0.4);
    in.add_single(0, s.f, 0.5);
    in.add_two_photons(0, s.f, std::sqrt(1 - 0.16 - 0.25));
    for (SfgModel m : {SfgModel::kNumberSelective, SfgModel::kPhotonWise}) {
        SfgResult r = sfg_extract(in, 0, 1, s.gate, m);
        EXPECT_NEAR(r.state.total_probability(), 1.0, 1e-10) << to_string(m);
    }
}

TEST(SfgExtract, MatchedOrthogonalPairStaysOnSignal) {
    Gate s(golden::kUpperMatchingSigma);
    FewPhotonState in = s.rails();
    in.set_vacuum_amp(0);
    in.add_two_photons(0, s.f);
    FewPhotonState scattered = apply_tls(in, 0, kLossless);
    const TwoPhotonAmp &bar = scattered.doubles().at(0);
    // Both-converted amplitude.
    EXPECT_LT(std::abs(inner2(product_state(s.fp), bar)), 1e-3);

    SfgResult ideal = sfg_extract(scattered, 0, 1, s.gate);
    EXPECT_LT(ideal.state.rail_weight(1), 1e-6);
    EXPECT_NEAR(ideal.state.doubles().at(0).norm_sq(), bar.norm_sq(), 1e-6);

    SfgResult wise = sfg_extract(scattered, 0, 1, s.gate, SfgModel::kPhotonWise);
    double leak = leakage_metric(s.gate, bar);
    EXPECT_NEAR(wise.leakage, leak, 1e-10);
    EXPECT_GT(leak, 0.0);
    EXPECT_NEAR(wise.state.total_probability(), scattered.total_probability(), 1e-10);
}

TEST(SfgReverse, UndoesExtractionOnOnePhotonSubspace) {
    Gate s(1.0);
    FewPhotonState in = s.one(s.fp, 0.6, 0.8);
    FewPhotonState back = sfg_reverse(sfg_extract(in, 0, 1, s.gate).state, 1, 0, s.gate);
    EXPECT_NEAR(fidelity(back, in), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(state_inner(in, back) - 1.0), 0.0, 1e-12);
    FewPhotonState vac = s.rails();
    EXPECT_NEAR(fidelity(sfg_reverse(vac, 1, 0, s.gate), vac), 1.0, 1e-15);
}

TEST(SfgReverse, PhaseOnAncillaCarriesOver) {
    Gate s(1.0);
    FewPhotonState in = s.one(s.fp, std::sqrt(0.5), std::sqrt(0.5));
    FewPhotonState mid = phase_shift(sfg_extract(in, 0, 1, s.gate).state, 1, 0.9);
    FewPhotonState back = sfg_reverse(mid, 1, 0, s.gate);
    cplx amp = inner1(s.fp, back.singles().at(0));
    EXPECT_NEAR(std::arg(amp), 0.9, 1e-12);
}

TEST(SfgReverse, EfficiencyComposesToAmplitude) {
    Gate s(1.0, 0.64);
    FewPhotonState in = s.one(s.fp);
    FewPhotonState mid = sfg_extract(in, 0, 1, s.gate).state;
    FewPhotonState ancilla_only = mid;
    ancilla_only.mutable_singles().erase(0);
    FewPhotonState back = sfg_reverse(ancilla_only, 1, 0, s.gate);
    EXPECT_NEAR(std::abs(inner1(s.fp, back.singles().at(0))), 0.64, 1e-12);
}

TEST(SfgReverse, StrayAncillaModeViolatesContract) {
    Gate s(1.0);
    OnePhotonAmp h = make_pulse({PulseKind::kGaussian, 0.8, 1.0}, s.grid);
    OnePhotonAmp perp = (h - s.fp.scaled(inner1(s.fp, h))).normalized();
    FewPhotonState in = s.rails();
    in.set_vacuum_amp(0);
    in.add_single(1, perp);
    EXPECT_THROW(sfg_reverse(in, 1, 0, s.gate), ContractViolation);
}

TEST(GemInvert, InvolutionAndEvenPulses) {
    Gate s(1.0);
    OnePhotonAmp h = make_pulse({PulseKind::kGaussian, 0.8, 1.0}, s.grid);
    FewPhotonState in = s.rails();
    in.set_vacuum_amp(0.5);
    in.add_single(0, h, 0.5);
    in.add_two_photons(0, h, std::sqrt(0.5));
    FewPhotonState once = gem_invert(in, 0);
    EXPECT_LT(fidelity(once, in), 0.999);
    EXPECT_NEAR(fidelity(gem_invert(once, 0), in), 1.0, 1e-12);
    EXPECT_NEAR(once.norm_sq(), in.norm_sq(), 1e-12);
    EXPECT_NEAR(fidelity(gem_invert(s.one(s.f), 0), s.one(s.f)), 1.0, 1e-12);
}

TEST(GemInvert, UndoesLosslessScatteringOfEvenPulse) {
    Gate s(0.7);
    FewPhotonState in = s.one(s.f);
    FewPhotonState out = apply_tls(gem_invert(apply_tls(in, 0, kLossless), 0), 0, kLossless);
    EXPECT_GE(fidelity(out, in), 1 - 1e-10);
}

TEST(GemInvert, AsymmetricGridRejected) {
    GridPtr g = std::make_shared<const SpectralGrid>(-10.0, 20.0, 3001);
    FewPhotonState st = FewPhotonState::vacuum(g, {{"s"}});
    EXPECT_THROW(gem_invert(st, 0), std::invalid_argument);
}

TEST(ComponentPhaseLoss, TwoPhotonSignAndPerPhotonLoss) {
    Gate s(1.0);
    FewPhotonState in = s.rails();
    in.set_vacuum_amp(0.6);
    in.add_single(0, s.f, 0.0);
    in.add_two_photons(0, s.f, 0.8);
    FewPhotonState neg = component_phase_loss(in, 0, 2, kPi, 1.0);
    EXPECT_NEAR(std::abs(inner2(in.doubles().at(0), neg.doubles().at(0)) + 0.64), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(neg.vacuum_amp() - 0.6), 0.0, 1e-15);
    EXPECT_NEAR(neg.total_probability(), in.total_probability(), 1e-12);

    FewPhotonState lossy = component_phase_loss(in, 0, 2, 0.0, 0.5);
    EXPECT_NEAR(std::abs(inner2(in.doubles().at(0), lossy.doubles().at(0))), 0.64 * 0.25, 1e-12);
    EXPECT_NEAR(lossy.total_probability(), 1.0, 1e-12);
    EXPECT_THROW(component_phase_loss(in, 0, 2, 0.0, 1.1), std::invalid_argument);
}

TEST(ComponentPhaseLoss, OnlyTheSelectedPhotonNumber) {
    Gate s(1.0);
    FewPhotonState in = s.rails();
    in.set_vacuum_amp(0.6);
    in.add_single(0, s.f, 0.48);
    in.add_two_photons(0, s.f, 0.64);
    FewPhotonState out = component_phase_loss(in, 0, 2, kPi, 1.0);
    EXPECT_NEAR(std::abs(inner1(in.singles().at(0), out.singles().at(0)) - 0.48 * 0.48), 0.0, 1e-12);
    FewPhotonState one = component_phase_loss(in, 0, 1, kPi / 2, 1.0);
    EXPECT_NEAR(std::abs(inner2(in.doubles().at(0), one.doubles().at(0)) - 0.64 * 0.64), 0.0, 1e-12);
}

TEST(ComponentPhaseLoss, CompensatingTransmissionScalesPairByEta2) {
    TlsParams p = TlsParams::from_beta(0.95);
    double sigma = 1.2;
    double e1 = epsilon1_analytic(p, sigma);
    double eb = epsilon_b_analytic(p, sigma);
    double eta2 = e1 * e1 / (eb - e1 * e1);
    Gate s(1.0);
    FewPhotonState in = s.rails();
    in.set_vacuum_amp(0);
    in.add_two_photons(0, s.f);
    FewPhotonState out = component_phase_loss(in, 0, 2, 0.0, std::sqrt(eta2));
    EXPECT_NEAR(std::abs(inner2(in.doubles().at(0), out.doubles().at(0))), eta2, 1e-12);
}

TEST(LeakageMetric, ProductOfPumpModeAndOrthogonalStates) {
    Gate s(1.0);
    EXPECT_NEAR(leakage_metric(s.gate, product_state(s.fp)), 0.0, 1e-20);
    OnePhotonAmp h = make_pulse({PulseKind::kGaussian, 0.8, 1.0}, s.grid);
    OnePhotonAmp perp = (h - s.fp.scaled(inner1(s.fp, h))).normalized();
    EXPECT_NEAR(leakage_metric(s.gate, product_state(perp)), 0.0, 1e-20);
    TwoPhotonAmp mixed = TwoPhotonAmp::symmetrized(JointAmp::product(s.fp, perp, std::sqrt(2.0)));
    EXPECT_NEAR(leakage_metric(s.gate, mixed), 1.0, 1e-12);
}
