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

#include "tlsphot/sweeps.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tlsphot/errors.h"

namespace tlsphot {

void SweepSpec::validate() const {
    if (betas.empty()) {
        throw std::invalid_argument("sweep.betas: at least one value is required");
    }
    for (double b : betas) {
        if (!(b > 0 && b <= 1)) {
            throw std::invalid_argument("sweep.betas: beta_dir must lie in (0, 1]");
        }
    }
    for (double b : spot_betas) {
        if (!(b > 0 && b <= 1)) {
            throw std::invalid_argument("sweep.spot_betas: beta_dir must lie in (0, 1]");
        }
    }
    if (!(sigma_min > 0)) {
        throw std::invalid_argument("sweep.sigma_min: must be positive");
    }
    if (!(sigma_max > sigma_min)) {
        throw std::invalid_argument("sweep.sigma_max: must exceed sigma_min");
    }
    if (sigma_count < 2) {
        throw std::invalid_argument("sweep.sigma_count: at least 2 samples are required");
    }
    for (double s : check_sigmas) {
        if (!(s > 0)) {
            throw std::invalid_argument("sweep.check_sigmas: widths must be positive");
        }
    }
}

std::vector<double> SweepSpec::sigmas() const {
    std::vector<double> s(sigma_count);
    double a = std::log(sigma_min);
    double b = std::log(sigma_max);
    for (int k = 0; k < sigma_count; k++) {
        s[k] = std::exp(a + (b - a) * k / (sigma_count - 1));
    }
    s.front() = sigma_min;
    s.back() = sigma_max;
    return s;
}

MatchingOptions SweepSpec::matching() const {
    MatchingOptions m;
    m.kind = kind;
    m.grid = grid;
    return m;
}

namespace {

std::string key(const char *what, double beta, const char *branch = nullptr) {
    std::ostringstream out;
    out << what << "[beta=" << format_double(beta);
    if (branch) {
        out << "," << branch;
    }
    out << "]";
    return out.str();
}

double half_eps1_sq(const TlsParams &p, double sigma, const MatchingOptions &m, double numeric_e1) {
    double e1 = m.kind == PulseKind::kLorentzian ? epsilon1_analytic(p, sigma) : numeric_e1;
    return 0.5 * e1 * e1;
}

}  // namespace

SweepOutput fig1b_data(const SweepSpec &spec) {
    spec.validate();
    MatchingOptions m = spec.matching();
    SweepOutput out;

    Table curves{"fig1b", {"beta", "sigma_over_gamma", "eta", "half_eps1_sq"}};
    for (double beta : spec.betas) {
        TlsParams p = TlsParams::from_beta(beta);
        for (double sigma : spec.sigmas()) {
            MatchingTerms t = matching_terms(p, sigma, m);
            curves.add_row({beta, sigma, t.eta, half_eps1_sq(p, sigma, m, t.epsilon1)});
        }
    }

    Table crossings{"fig1b_crossings", {"beta", "branch", "sigma_over_gamma", "eta", "half_eps1_sq"}};
    for (double beta : spec.betas) {
        TlsParams p = TlsParams::from_beta(beta);
        for (Branch b : {Branch::kLower, Branch::kUpper}) {
            std::string branch(to_string(b));
            try {
                double sigma = matching_sigma(p, b, m);
                MatchingTerms t = matching_terms(p, sigma, m);
                crossings.add_row({beta, branch, sigma, t.eta, half_eps1_sq(p, sigma, m, t.epsilon1)});
                out.headlines.push_back({key("crossing_sigma", beta, branch.c_str()), sigma});
            } catch (const NoCrossingError &) {
                crossings.add_row({beta, branch, std::nan(""), std::nan(""), std::nan("")});
            }
        }
    }

    Table checks{"fig1b_checks", {"beta", "sigma_over_gamma", "eta_closed_form", "eta_quadrature", "abs_diff"}};
    if (spec.kind == PulseKind::kLorentzian) {
        TlsParams p;
        for (double sigma : spec.check_sigmas) {
            GridPtr g = grid_for_pulse(spec.grid, sigma);
            double numeric = eta_numeric(p, make_pulse({PulseKind::kLorentzian, sigma, 0.0}, g));
            double exact = eta_analytic(p, sigma);
            checks.add_row({1.0, sigma, exact, numeric, std::abs(numeric - exact)});
            out.headlines.push_back({"eta_quadrature[sigma=" + format_double(sigma) + "]", numeric});
        }
    }
    out.tables = {curves, crossings, checks};
    return out;
}

SweepOutput loss_curves(const SweepSpec &spec) {
    spec.validate();
    MatchingOptions m = spec.matching();
    SweepOutput out;
    Table t{"loss_curves", {"beta", "branch", "sigma_over_gamma", "loss_two_photon", "loss_single_pair"}};
    for (double beta : spec.betas) {
        for (Branch b : {Branch::kLower, Branch::kUpper}) {
            SuccessRow r = success_row(beta, m, b);
            t.add_row({beta, std::string(to_string(b)), r.sigma, r.loss_two_photon, r.loss_single_pair});
            if (beta < 1 && !r.flagged) {
                out.headlines.push_back({key("loss_two_photon", beta, std::string(to_string(b)).c_str()),
                                         r.loss_two_photon});
            }
        }
    }
    out.tables = {t};
    return out;
}

SweepOutput fig3_data(const SweepSpec &spec) {
    spec.validate();
    MatchingOptions m = spec.matching();
    SweepOutput out;
    Table curves{"fig3", {"beta", "sigma_over_gamma", "bell_success", "cz_success"}};
    for (double beta : spec.betas) {
        SuccessRow r = success_row(beta, m);
        curves.add_row({beta, r.sigma, r.bell, r.cz});
    }

    Table spots{"fig3_spot_checks", {"beta", "quantity", "curve", "simulated", "abs_diff"}};
    for (double beta : spec.spot_betas) {
        TlsParams p = TlsParams::from_beta(beta);
        OperatingPointOptions oo;
        oo.kind = spec.kind;
        oo.grid = spec.grid;
        OperatingPoint op = make_operating_point(p, oo);
        double bell = 0;
        for (BellState b : kBellStates) {
            bell += bell_analyzer(make_bell_state(b, op.mode), op).success_prob / 4;
        }
        double e1sq = op.epsilon1 * op.epsilon1;
        double bell_curve = op.epsilon_b / 2;
        spots.add_row({beta, std::string("bell_success"), bell_curve, bell, std::abs(bell - bell_curve)});
        FewPhotonState in = make_logical_state({0.5, 0.5, 0.5, 0.5}, op.mode);
        double cz = cz_gate(in, op).success_prob;
        spots.add_row({beta, std::string("cz_success"), e1sq * e1sq, cz, std::abs(cz - e1sq * e1sq)});
        out.headlines.push_back({key("bell_success_simulated", beta), bell});
        out.headlines.push_back({key("cz_success_simulated", beta), cz});
    }
    out.tables = {curves, spots};
    return out;
}

SweepOutput matching_points(const SweepSpec &spec) {
    spec.validate();
    MatchingOptions m = spec.matching();
    SweepOutput out;
    Table t{"matching_points", {"beta", "branch", "sigma_over_gamma", "eta", "half_eps1_sq", "residual"}};
    for (double beta : spec.betas) {
        TlsParams p = TlsParams::from_beta(beta);
        for (Branch b : {Branch::kLower, Branch::kUpper}) {
            std::string branch(to_string(b));
            try {
                double sigma = matching_sigma(p, b, m);
                MatchingTerms mt = matching_terms(p, sigma, m);
                double half = 0.5 * mt.epsilon1 * mt.epsilon1;
                t.add_row({beta, branch, sigma, mt.eta, half, mt.eta - half});
                out.headlines.push_back({key("sigma", beta, branch.c_str()), sigma});
            } catch (const NoCrossingError &) {
                t.add_row({beta, branch, std::nan(""), std::nan(""), std::nan(""), std::nan("")});
            }
        }
    }
    out.tables = {t};
    return out;
}

}  // namespace tlsphot
