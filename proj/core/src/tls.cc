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

#include "tlsphot/tls.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "tlsphot/errors.h"
#include "tlsphot/spectral_op.h"

namespace tlsphot {

TlsParams TlsParams::from_beta(double beta, double gamma_wg) {
    if (!(beta > 0 && beta <= 1)) {
        throw DomainError("beta_dir must lie in (0, 1]");
    }
    TlsParams p;
    p.gamma_wg = gamma_wg;
    p.gamma_loss = beta == 1 ? 0.0 : gamma_wg * (1 - beta) / beta;
    p.validate();
    return p;
}

void TlsParams::validate() const {
    if (!(gamma_wg > 0) || !std::isfinite(gamma_wg)) {
        throw DomainError("waveguide decay rate must be positive");
    }
    if (!(gamma_loss >= 0) || !std::isfinite(gamma_loss)) {
        throw DomainError("loss rate must be non-negative");
    }
}

cplx transfer_coeff(const TlsParams &p, double delta) {
    const cplx i{0, 1};
    return (delta + i * (p.gamma_loss - p.gamma_wg) / 2.0) / (delta + i * (p.gamma_loss + p.gamma_wg) / 2.0);
}

cplx s_coeff(const TlsParams &p, double delta) {
    // Written without the cancellation in 1 - t.
    const cplx i{0, 1};
    return std::sqrt(p.gamma_wg) / (delta + i * (p.gamma_loss + p.gamma_wg) / 2.0);
}

CVec transfer_samples(const TlsParams &p, const SpectralGrid &grid) {
    CVec t(grid.size());
    for (int k = 0; k < grid.size(); k++) {
        t[k] = transfer_coeff(p, grid.detuning(k));
    }
    return t;
}

CVec s_samples(const TlsParams &p, const SpectralGrid &grid) {
    CVec s(grid.size());
    for (int k = 0; k < grid.size(); k++) {
        s[k] = s_coeff(p, grid.detuning(k));
    }
    return s;
}

ScatterOneResult scatter_one(const TlsParams &p, const OnePhotonAmp &f) {
    OnePhotonAmp out = f.multiplied(transfer_samples(p, *f.grid()));
    double e1 = out.norm_sq();
    return {out, e1, f.norm_sq() - e1};
}

CVec bound_sum(const TlsParams &p, const JointAmp &psi) {
    const SpectralGrid &g = *psi.grid();
    size_t n = g.size();
    const auto &w = g.weights();
    CVec s = s_samples(p, g);
    CVec total(g.sum_size(), cplx{0, 0});
    for (const auto &t : psi.terms()) {
        CVec a(n), as(n), b(n), bs(n);
        for (size_t k = 0; k < n; k++) {
            a[k] = w[k] * (*t.first)[k];
            as[k] = a[k] * s[k];
            b[k] = w[k] * (*t.second)[k];
            bs[k] = b[k] * s[k];
        }
        CVec c1 = convolve(as, b);
        CVec c2 = convolve(a, bs);
        for (size_t m = 0; m < total.size(); m++) {
            cplx v = (c1[m] + c2[m]) * t.coef;
            if (t.sum) {
                v *= (*t.sum)[m];
            }
            total[m] += v;
        }
    }
    double inv_h = 1.0 / g.spacing();
    for (auto &x : total) {
        x *= inv_h;
    }
    return total;
}

JointAmp bound_amplitude(const TlsParams &p, const JointAmp &psi) {
    const cplx k = cplx{0, 1} * std::sqrt(p.gamma_wg) / (2 * std::numbers::pi);
    VecPtr s = share(s_samples(p, *psi.grid()));
    JointAmp out(psi.grid());
    if (!psi.empty()) {
        out.add_term({k, s, s, share(bound_sum(p, psi))});
    }
    return out;
}

TwoPhotonAmp scatter_two(const TlsParams &p, const TwoPhotonAmp &psi) {
    SpectralOp t = SpectralOp::diagonal(transfer_samples(p, *psi.grid()));
    JointAmp out = apply_pair(t, t, psi.joint());
    out.add(bound_amplitude(p, psi.joint()));
    out.compress();
    return TwoPhotonAmp::trusted(std::move(out));
}

TwoPhotonAmp scatter_two(const TlsParams &p, const JointAmp &psi) {
    return scatter_two(p, TwoPhotonAmp::checked(psi));
}

namespace {

struct PairPieces {
    JointAmp image;
    JointAmp bound;
};

PairPieces pair_pieces(const TlsParams &p, const OnePhotonAmp &f) {
    OnePhotonAmp tf = f.multiplied(transfer_samples(p, *f.grid()));
    return {JointAmp::product(tf, tf), bound_amplitude(p, JointAmp::product(f, f))};
}

void require_positive(double sigma) {
    if (!(sigma > 0)) {
        throw DomainError("sigma must be positive");
    }
}

}  // namespace

double eta_numeric(const TlsParams &p, const OnePhotonAmp &f) {
    PairPieces pp = pair_pieces(p, f);
    return 0.5 * std::abs(inner(pp.image, pp.bound));
}

double epsilon_b_numeric(const TlsParams &p, const OnePhotonAmp &f) {
    return bound_amplitude(p, JointAmp::product(f, f)).norm_sq();
}

double eta_analytic(const TlsParams &p, double sigma) {
    require_positive(sigma);
    if (p.gamma_loss != 0) {
        throw DomainError("the closed form for eta holds only without loss");
    }
    double G = p.gamma_wg;
    double s = sigma;
    return 4 * G * G * s * (3 * G * G + 38 * G * s + 96 * s * s) /
           (std::pow(G + 2 * s, 3) * (3 * G + 2 * s) * (G + 6 * s));
}

double epsilon1_analytic(const TlsParams &p, double sigma) {
    require_positive(sigma);
    double G = p.gamma_wg;
    double g = p.gamma_loss;
    double a = g + G;
    return 1 - 4 * g * G * (a + 4 * sigma) / (a * (a + 2 * sigma) * (a + 2 * sigma));
}

double epsilon_b_analytic(const TlsParams &p, double sigma) {
    require_positive(sigma);
    double G = p.gamma_wg;
    double a = p.gamma_loss + G;
    double s = sigma;
    return 16 * std::pow(G, 4) * s * (38 * s * a + 3 * a * a + 96 * s * s) /
           (a * a * std::pow(a + 2 * s, 3) * (3 * a + 2 * s) * (a + 6 * s));
}

ScatterTwoResult decompose(const TlsParams &p, const OnePhotonAmp &f) {
    PairPieces pp = pair_pieces(p, f);
    double e1sq = pp.image.norm_sq();
    double eb = pp.bound.norm_sq();
    cplx overlap = inner(pp.image, pp.bound);

    JointAmp out = pp.image;
    out.add(pp.bound);
    out.compress();
    double out_norm = out.norm_sq();
    double in_norm = f.norm_sq() * f.norm_sq();

    double scale = 1.0 / std::sqrt(e1sq);
    cplx along = (e1sq + overlap) * scale;
    double orth_sq = std::max(0.0, out_norm - std::norm(along));
    return {TwoPhotonAmp::trusted(std::move(out)),
            along,
            std::sqrt(orth_sq),
            in_norm - out_norm,
            0.5 * std::abs(overlap),
            std::sqrt(e1sq),
            eb,
            std::abs(std::arg(-overlap))};
}

std::string_view to_string(Branch b) {
    return b == Branch::kLower ? "lower" : "upper";
}

namespace {

bool closed_form(const TlsParams &p, const MatchingOptions &opts) {
    return !opts.force_numeric && opts.kind == PulseKind::kLorentzian && p.gamma_loss == 0;
}

}  // namespace

MatchingTerms matching_terms(const TlsParams &p, double sigma, const MatchingOptions &opts) {
    require_positive(sigma);
    if (closed_form(p, opts)) {
        return {eta_analytic(p, sigma), 1.0, epsilon_b_analytic(p, sigma)};
    }
    GridConfig gc = opts.grid;
    gc.auto_resolve = true;
    GridPtr grid = grid_for_pulse(gc, sigma, 0.0, p.gamma_wg, p.gamma_loss);
    OnePhotonAmp f = make_pulse({opts.kind, sigma, 0.0}, grid);
    PairPieces pp = pair_pieces(p, f);
    double e1sq = pp.image.norm_sq();
    return {0.5 * std::abs(inner(pp.image, pp.bound)), std::sqrt(e1sq), pp.bound.norm_sq()};
}

double matching_condition(const TlsParams &p, double sigma, const MatchingOptions &opts) {
    MatchingTerms m = matching_terms(p, sigma, opts);
    return m.eta - 0.5 * m.epsilon1 * m.epsilon1;
}

namespace {

Extremum condition_peak(const TlsParams &p, const MatchingOptions &opts) {
    auto f = [&](double log_sigma) { return matching_condition(p, std::exp(log_sigma), opts); };
    double tol = closed_form(p, opts) ? 1e-9 : 1e-4;
    Extremum e = golden_section_max(f, std::log(opts.sigma_min), std::log(opts.sigma_max), tol);
    return {std::exp(e.x), e.value};
}

}  // namespace

double matching_sigma(const TlsParams &p, Branch branch, const MatchingOptions &opts) {
    p.validate();
    if (!(opts.sigma_min > 0 && opts.sigma_max > opts.sigma_min)) {
        throw DomainError("matching search needs 0 < sigma_min < sigma_max");
    }
    Extremum peak = condition_peak(p, opts);
    if (peak.value <= 0) {
        std::ostringstream msg;
        msg << "eta stays below epsilon1^2/2 for beta_dir = " << p.beta_dir() << " (max difference " << peak.value
            << " at sigma = " << peak.x << ")";
        throw NoCrossingError(msg.str());
    }
    auto f = [&](double s) { return matching_condition(p, s, opts); };
    double tol = closed_form(p, opts) ? std::min(opts.sigma_tol, 1e-13) : opts.sigma_tol;
    if (branch == Branch::kLower) {
        return bisect(f, opts.sigma_min, peak.x, tol);
    }
    return bisect(f, peak.x, opts.sigma_max, tol);
}

Extremum eta_peak(const TlsParams &p, const MatchingOptions &opts) {
    auto f = [&](double log_sigma) { return matching_terms(p, std::exp(log_sigma), opts).eta; };
    double tol = closed_form(p, opts) ? 1e-10 : 1e-4;
    Extremum e = golden_section_max(f, std::log(opts.sigma_min), std::log(opts.sigma_max), tol);
    return {std::exp(e.x), e.value};
}

}  // namespace tlsphot
