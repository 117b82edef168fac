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
#include <random>

#include "oracle.h"
#include "tlsphot/errors.h"
#include "tlsphot/fft.h"
#include "tlsphot/pulse.h"
#include "tlsphot/spectral_op.h"
#include "tlsphot/two_photon.h"

using namespace tlsphot;

namespace {

OnePhotonAmp lorentzian(double sigma, double center, GridPtr g) {
    return make_pulse({PulseKind::kLorentzian, sigma, center}, std::move(g));
}

CVec random_vec(size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> nd;
    CVec v(n);
    for (auto &x : v) {
        x = {nd(rng), nd(rng)};
    }
    return v;
}

// A small amplitude mixing separable and sum-modulated terms.
JointAmp mixed_amp(GridPtr g, unsigned seed) {
    JointAmp a(g);
    int n = g->size();
    a.add_term({cplx{0.7, -0.2}, share(random_vec(n, seed)), share(random_vec(n, seed + 1)), nullptr});
    a.add_term({cplx{-0.3, 0.5}, share(random_vec(n, seed + 2)), share(random_vec(n, seed + 3)),
                share(random_vec(2 * n - 1, seed + 4))});
    return a;
}

}  // namespace

TEST(SpectralGrid, UniformSymmetricTrapezoid) {
    SpectralGrid g(25.0, 4001);
    EXPECT_EQ(g.size(), 4001);
    EXPECT_DOUBLE_EQ(g.delta_min(), -25.0);
    EXPECT_TRUE(g.symmetric());
    EXPECT_DOUBLE_EQ(g.detuning(2000), 0.0);
    for (int i = 0; i + 1 < g.size(); i++) {
        ASSERT_NEAR(g.detuning(i + 1) - g.detuning(i), g.spacing(), 1e-12);
    }
    double total = 0;
    for (double w : g.weights()) {
        total += w;
    }
    EXPECT_NEAR(total, 50.0, 1e-10);
    EXPECT_DOUBLE_EQ(g.weight(0), g.spacing() / 2);
    EXPECT_EQ(g.mirror(0), 4000);
    EXPECT_EQ(g.sum_size(), 8001);
    EXPECT_DOUBLE_EQ(g.sum_detuning(4000), 0.0);
}

TEST(SpectralGrid, RejectsEvenOrTinyCounts) {
    EXPECT_THROW(SpectralGrid(10.0, 4000), std::invalid_argument);
    EXPECT_THROW(SpectralGrid(10.0, 1), std::invalid_argument);
    EXPECT_THROW(SpectralGrid(-1.0, 11), std::invalid_argument);
}

TEST(SpectralGrid, AsymmetricGridHasNoMirror) {
    SpectralGrid g(-10.0, 20.0, 31);
    EXPECT_FALSE(g.symmetric());
    EXPECT_THROW(g.mirror(0), std::invalid_argument);
}

TEST(SpectralGrid, DefaultWindowKeepsSpacingUnderRefinement) {
    GridConfig c;
    GridPtr g = grid_for_pulse(c, 0.5);
    EXPECT_DOUBLE_EQ(g->delta_max(), 25.0);
    EXPECT_EQ(g->size(), 4001);
    GridPtr wide = grid_for_pulse(c, 2.0);
    EXPECT_DOUBLE_EQ(wide->delta_max(), 50.0);
    GridPtr r = grid_for_pulse(c.refined(), 0.5);
    EXPECT_EQ(r->size(), 8001);
    EXPECT_DOUBLE_EQ(r->delta_max(), 50.0);
    EXPECT_DOUBLE_EQ(r->spacing(), g->spacing());

    GridConfig fixed;
    fixed.delta_max = 40.0;
    fixed.n_points = 1001;
    EXPECT_DOUBLE_EQ(grid_for_pulse(fixed, 1.0)->delta_max(), 40.0);
    EXPECT_DOUBLE_EQ(grid_for_pulse(fixed.refined(), 1.0)->delta_max(), 80.0);
}

TEST(SpectralGrid, AutoResolveTightensSpacing) {
    GridConfig c;
    c.auto_resolve = true;
    GridPtr g = grid_for_pulse(c, 0.05);
    EXPECT_LE(g->spacing(), 0.005 + 1e-15);
    EXPECT_EQ(g->size() % 2, 1);
}

TEST(MakePulse, LorentzianPeakMatchesFormula) {
    PulseShape s{PulseKind::kLorentzian, 1.0, 0.0};
    EXPECT_NEAR(pulse_value(s, 0.0), std::sqrt(2 / std::numbers::pi), 1e-15);
    PulseShape w{PulseKind::kLorentzian, 0.3, 0.0};
    EXPECT_NEAR(pulse_value(w, 0.0), std::sqrt(2 * std::pow(0.3, 3) / std::numbers::pi) / (0.3 * 0.3), 1e-14);
}

TEST(MakePulse, UnitDiscreteNorm) {
    for (auto kind : {PulseKind::kLorentzian, PulseKind::kGaussian}) {
        for (double sigma : {0.1, 0.5, 1.0, 3.0}) {
            GridPtr g = grid_for_pulse({}, sigma);
            EXPECT_NEAR(make_pulse({kind, sigma, 0.0}, g).norm_sq(), 1.0, 1e-12);
        }
    }
}

TEST(MakePulse, GaussianWidthIsIntensityStandardDeviation) {
    GridPtr g = grid_for_pulse({}, 0.7);
    OnePhotonAmp f = make_pulse({PulseKind::kGaussian, 0.7, 0.0}, g);
    double var = 0;
    for (int i = 0; i < g->size(); i++) {
        var += g->weight(i) * g->detuning(i) * g->detuning(i) * std::norm(f[i]);
    }
    EXPECT_NEAR(var, 0.49, 1e-10);
}

TEST(MakePulse, RefinementChangesSamplesBelowOneInAMillion) {
    OnePhotonAmp coarse = lorentzian(1.0, 0.0, make_grid(50.0, 4001));
    OnePhotonAmp fine = lorentzian(1.0, 0.0, make_grid(50.0, 8001));
    double diff = 0;
    for (int i = 0; i < coarse.size(); i++) {
        diff += coarse.grid()->weight(i) * std::norm(coarse[i] - fine[2 * i]);
    }
    EXPECT_LT(std::sqrt(diff), 1e-6);
}

TEST(MakePulse, ResolutionErrorsNameTheBound) {
    try {
        lorentzian(0.05, 0.0, make_grid(25.0, 1001));
        FAIL() << "coarse grid accepted";
    } catch (const ResolutionError &e) {
        EXPECT_NE(std::string(e.what()).find("sigma/5"), std::string::npos);
    }
    try {
        lorentzian(1.0, 0.0, make_grid(10.0, 4001));
        FAIL() << "narrow window accepted";
    } catch (const ResolutionError &e) {
        EXPECT_NE(std::string(e.what()).find("25 sigma"), std::string::npos);
    }
    EXPECT_THROW(make_pulse({PulseKind::kLorentzian, -1.0, 0.0}, make_grid(25.0, 101)), DomainError);
}

TEST(MakePulse, ResolutionReportFlagsSpacingAboveTenth) {
    ResolutionReport r = check_resolution({PulseKind::kLorentzian, 0.1, 0.0}, *make_grid(25.0, 4001));
    EXPECT_TRUE(r.ok());
    EXPECT_FALSE(r.recommended());
    ResolutionReport good = check_resolution({PulseKind::kLorentzian, 1.0, 0.0}, *make_grid(25.0, 4001));
    EXPECT_TRUE(good.recommended());
}

TEST(Inner1, NormalizedSelfOverlapAndConjugateSymmetry) {
    GridPtr g = grid_for_pulse({}, 1.0, 3.0);
    OnePhotonAmp f = lorentzian(1.0, 0.0, g);
    OnePhotonAmp h = make_pulse({PulseKind::kGaussian, 0.8, 0.5}, g);
    EXPECT_NEAR(std::abs(inner1(f, f) - 1.0), 0.0, 1e-12);
    cplx a = inner1(f, h.scaled(cplx{0.3, 0.9}));
    cplx b = inner1(h.scaled(cplx{0.3, 0.9}), f);
    EXPECT_NEAR(std::abs(a - std::conj(b)), 0.0, 1e-15);
}

TEST(Inner1, SeparatedLorentziansMatchQuadratureOracle) {
    GridPtr g = make_grid(30.0, 4801);
    OnePhotonAmp a = lorentzian(1.0, -2.5, g);
    OnePhotonAmp b = lorentzian(1.0, 2.5, g);
    double value = inner1(a, b).real();
    PulseShape pa{PulseKind::kLorentzian, 1.0, -2.5};
    PulseShape pb{PulseKind::kLorentzian, 1.0, 2.5};
    double core = oracle::simpson([&](double d) { return pulse_value(pa, d) * pulse_value(pb, d); }, -400, 400, 400000);
    double exact = 4.0 / (25.0 + 4.0);
    EXPECT_NEAR(core, exact, 1e-5);
    EXPECT_NEAR(value, exact, 2e-4);
}

TEST(Inner1, RejectsMixedGrids) {
    OnePhotonAmp a = lorentzian(1.0, 0.0, make_grid(30.0, 401));
    OnePhotonAmp b = lorentzian(1.0, 0.0, make_grid(30.0, 403));
    EXPECT_THROW(inner1(a, b), GridMismatchError);
}

TEST(Fft, ConvolutionMatchesDirectSum) {
    CVec a = random_vec(700, 1);
    CVec b = random_vec(333, 2);
    CVec c = convolve(a, b);
    ASSERT_EQ(c.size(), 1032u);
    for (size_t m : {0ul, 17ul, 500ul, 1031ul}) {
        cplx direct = 0;
        for (size_t k = 0; k < a.size(); k++) {
            if (m >= k && m - k < b.size()) {
                direct += a[k] * b[m - k];
            }
        }
        EXPECT_NEAR(std::abs(c[m] - direct), 0.0, 1e-10);
    }
}

TEST(Fft, CorrelationAgainstSumGrid) {
    size_t n = 200;
    CVec u = random_vec(n, 3);
    CVec J = random_vec(2 * n - 1, 4);
    CVec r = correlate_sum(u, J);
    for (size_t j : {0ul, 99ul, 199ul}) {
        cplx direct = 0;
        for (size_t i = 0; i < n; i++) {
            direct += u[i] * J[i + j];
        }
        EXPECT_NEAR(std::abs(r[j] - direct), 0.0, 1e-10);
    }
}

TEST(JointAmp, StructuredInnerMatchesDense) {
    GridPtr g = make_grid(4.0, 41);
    JointAmp a = mixed_amp(g, 10);
    JointAmp b = mixed_amp(g, 20);
    cplx dense = oracle::inner_dense(*g, a.to_dense(), b.to_dense());
    EXPECT_NEAR(std::abs(inner(a, b) - dense), 0.0, 1e-10 * std::abs(dense));
    EXPECT_NEAR(a.norm_sq(), oracle::inner_dense(*g, a.to_dense(), a.to_dense()).real(), 1e-10);
}

TEST(JointAmp, CompressKeepsTheFunction) {
    GridPtr g = make_grid(4.0, 41);
    JointAmp a = mixed_amp(g, 30);
    JointAmp twice = a;
    twice.add(a, 2.0);
    twice.add(a.swapped(), -1.0);
    auto before = twice.to_dense();
    twice.compress();
    EXPECT_LT(oracle::max_abs_diff(before, twice.to_dense()), 1e-12);
    EXPECT_LE(twice.num_terms(), 4u);
}

TEST(JointAmp, ContractionMatchesDense) {
    GridPtr g = make_grid(4.0, 41);
    JointAmp a = mixed_amp(g, 40);
    OnePhotonAmp m(g, random_vec(41, 41));
    OnePhotonAmp x = contract_first(m, a);
    auto d = a.to_dense();
    for (int j : {0, 20, 40}) {
        cplx direct = 0;
        for (int i = 0; i < 41; i++) {
            direct += g->weight(i) * std::conj(m[i]) * d[i][j];
        }
        EXPECT_NEAR(std::abs(x[j] - direct), 0.0, 1e-10);
    }
}

TEST(Inner2, ProductNormAndSesquilinearity) {
    GridPtr g = grid_for_pulse({}, 1.0);
    OnePhotonAmp f = lorentzian(1.0, 0.0, g);
    OnePhotonAmp h = make_pulse({PulseKind::kGaussian, 0.5, 1.0}, g);
    TwoPhotonAmp ff = product_state(f);
    TwoPhotonAmp hh = product_state(h);
    EXPECT_NEAR(inner2(ff, ff).real(), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(inner2(ff, hh) - std::conj(inner2(hh, ff))), 0.0, 1e-15);
    cplx al{0.3, -1.1};
    cplx be{2.0, 0.4};
    TwoPhotonAmp mix = hh.scaled(al) + ff.scaled(be);
    cplx lhs = inner2(ff, mix);
    cplx rhs = al * inner2(ff, hh) + be * inner2(ff, ff);
    EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-14);
}

TEST(ProductState, SymmetricAndPeaked) {
    GridPtr g = make_grid(10.0, 2001);
    OnePhotonAmp f = lorentzian(0.05, 3.0, g);
    TwoPhotonAmp p = product_state(f);
    EXPECT_EQ(p.at(3, 1500), p.at(1500, 3));
    int peak = 1300;
    EXPECT_DOUBLE_EQ(g->detuning(peak), 3.0);
    double top = std::abs(p.at(peak, peak));
    EXPECT_GT(top, 100 * std::abs(p.at(peak, 1000)));
    EXPECT_GT(top, 100 * std::abs(p.at(1000, 1000)));
}

TEST(TwoPhotonAmp, CheckedRejectsAsymmetry) {
    GridPtr g = make_grid(4.0, 41);
    OnePhotonAmp a(g, random_vec(41, 5));
    OnePhotonAmp b(g, random_vec(41, 6));
    EXPECT_THROW(TwoPhotonAmp::checked(JointAmp::product(a, b)), AsymmetricAmplitudeError);
    TwoPhotonAmp s = TwoPhotonAmp::symmetrized(JointAmp::product(a, b));
    EXPECT_LT(symmetry_defect(s.joint()), 1e-14);
    EXPECT_NO_THROW(TwoPhotonAmp::checked(s.joint()));
}

TEST(TimeReverse, InvolutionFixedPointAndShift) {
    GridPtr g = grid_for_pulse({}, 1.0, 2.0);
    OnePhotonAmp f = lorentzian(1.0, 2.0, g);
    OnePhotonAmp r = time_reverse(f);
    OnePhotonAmp expected = lorentzian(1.0, -2.0, g);
    double diff = (r - expected).norm_sq();
    EXPECT_LT(diff, 1e-28);
    EXPECT_LT((time_reverse(r) - f).norm_sq(), 1e-30);
    EXPECT_NEAR(r.norm_sq(), f.norm_sq(), 1e-14);
    OnePhotonAmp even = lorentzian(1.0, 0.0, g);
    EXPECT_LT((time_reverse(even) - even).norm_sq(), 1e-28);
}

TEST(TimeReverse, TwoPhotonMirrorsBothArguments) {
    GridPtr g = make_grid(4.0, 41);
    TwoPhotonAmp s = TwoPhotonAmp::symmetrized(mixed_amp(g, 50));
    TwoPhotonAmp r = time_reverse(s);
    for (auto [i, j] : {std::pair{0, 3}, std::pair{10, 29}, std::pair{40, 40}}) {
        EXPECT_NEAR(std::abs(r.at(i, j) - s.at(40 - i, 40 - j)), 0.0, 1e-12);
    }
    EXPECT_NEAR(r.norm_sq(), s.norm_sq(), 1e-12);
    TwoPhotonAmp back = time_reverse(r);
    EXPECT_LT(oracle::max_abs_diff(back.joint().to_dense(), s.joint().to_dense()), 1e-12);
}

TEST(TimeReverse, AsymmetricGridThrows) {
    GridPtr g = std::make_shared<const SpectralGrid>(-5.0, 10.0, 31);
    OnePhotonAmp f(g, random_vec(31, 9));
    EXPECT_THROW(time_reverse(f), std::invalid_argument);
    EXPECT_THROW(time_reverse(product_state(f)), std::invalid_argument);
}

TEST(SpectralOp, ReflectingOneSideOfACorrelatedPairIsUnsupported) {
    GridPtr g = make_grid(4.0, 41);
    JointAmp a = mixed_amp(g, 60);
    EXPECT_THROW(apply_pair(SpectralOp::reflection(), SpectralOp::identity(), a), UnsupportedOperation);
}

TEST(SpectralOp, ProjectorThroughSumMatchesDense) {
    GridPtr g = make_grid(4.0, 41);
    JointAmp a = mixed_amp(g, 70);
    OnePhotonAmp in(g, random_vec(41, 71));
    OnePhotonAmp out(g, random_vec(41, 72));
    CVec diag = random_vec(41, 73);
    JointAmp r = apply_pair(SpectralOp::projector(out, in, 0.5), SpectralOp::diagonal(diag), a);
    auto d = a.to_dense();
    for (int i : {0, 7, 40}) {
        for (int j : {1, 20, 39}) {
            cplx direct = 0;
            for (int k = 0; k < 41; k++) {
                direct += g->weight(k) * std::conj(in[k]) * d[k][j];
            }
            direct *= 0.5 * out[i] * diag[j];
            EXPECT_NEAR(std::abs(r.at(i, j) - direct), 0.0, 1e-10);
        }
    }
}
