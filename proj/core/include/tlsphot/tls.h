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

#ifndef TLSPHOT_TLS_H
#define TLSPHOT_TLS_H

#include "tlsphot/numerics.h"
#include "tlsphot/pulse.h"
#include "tlsphot/two_photon.h"

namespace tlsphot {

/// Two-level scatterer coupled to a chiral waveguide.
struct TlsParams {
    /// Decay rate into the guided mode. Sets the unit of detuning.
    double gamma_wg = 1.0;
    /// Decay rate into everything else.
    double gamma_loss = 0.0;

    double beta_dir() const {
        return gamma_wg / (gamma_loss + gamma_wg);
    }
    /// gamma_loss = gamma_wg (1 - beta) / beta
    static TlsParams from_beta(double beta, double gamma_wg = 1.0);
    void validate() const;
};

/// (d + i(g - G)/2) / (d + i(g + G)/2)
cplx transfer_coeff(const TlsParams &p, double delta);
/// (1 - t(d)) / (i sqrt(G))
cplx s_coeff(const TlsParams &p, double delta);
CVec transfer_samples(const TlsParams &p, const SpectralGrid &grid);
CVec s_samples(const TlsParams &p, const SpectralGrid &grid);

struct ScatterOneResult {
    OnePhotonAmp out;
    double epsilon1;
    double lost;
};

ScatterOneResult scatter_one(const TlsParams &p, const OnePhotonAmp &f);

/// I(P) = int dk psi(k, P - k) (s(k) + s(P - k)) on the sum grid, trapezoid rule along each
/// anti-diagonal.
CVec bound_sum(const TlsParams &p, const JointAmp &psi);
/// (i sqrt(G) / 2 pi) s(p1) s(p2) I(p1 + p2)
JointAmp bound_amplitude(const TlsParams &p, const JointAmp &psi);

/// Linear image t(p1) t(p2) psi plus the bound amplitude.
TwoPhotonAmp scatter_two(const TlsParams &p, const TwoPhotonAmp &psi);
/// Checks exchange symmetry first.
TwoPhotonAmp scatter_two(const TlsParams &p, const JointAmp &psi);

/// Half the overlap magnitude between the product image (tf)(x)(tf) and the bound amplitude of f(x)f.
double eta_numeric(const TlsParams &p, const OnePhotonAmp &f);
/// Squared norm of the bound amplitude of f(x)f.
double epsilon_b_numeric(const TlsParams &p, const OnePhotonAmp &f);

/// Lorentzian closed forms. eta_analytic needs gamma_loss == 0.
double eta_analytic(const TlsParams &p, double sigma);
double epsilon1_analytic(const TlsParams &p, double sigma);
double epsilon_b_analytic(const TlsParams &p, double sigma);

struct ScatterTwoResult {
    TwoPhotonAmp out;
    /// Component on the normalized product image.
    cplx coeff_along;
    double coeff_orth;
    double lost;
    double eta;
    double epsilon1;
    double epsilon_b;
    /// Distance of arg <product image|bound> from pi.
    double phase_residual;
};

ScatterTwoResult decompose(const TlsParams &p, const OnePhotonAmp &f);

enum class Branch { kLower, kUpper };

std::string_view to_string(Branch b);

struct MatchingOptions {
    PulseKind kind = PulseKind::kLorentzian;
    GridConfig grid{};
    double sigma_min = 0.01;
    double sigma_max = 20.0;
    double sigma_tol = 1e-10;
    /// Use quadrature even where the closed form applies.
    bool force_numeric = false;
};

struct MatchingTerms {
    double eta;
    double epsilon1;
    double epsilon_b;
};

/// eta, epsilon1 and epsilon_b at width sigma. Closed forms for lossless Lorentzians unless
/// forced numeric; quadrature on an auto-resolved grid otherwise.
MatchingTerms matching_terms(const TlsParams &p, double sigma, const MatchingOptions &opts = {});

/// eta - epsilon1^2 / 2
double matching_condition(const TlsParams &p, double sigma, const MatchingOptions &opts = {});

/// Width where eta = epsilon1^2 / 2 on the requested side of the eta hump.
double matching_sigma(const TlsParams &p, Branch branch, const MatchingOptions &opts = {});

/// Location and height of the eta maximum over sigma.
Extremum eta_peak(const TlsParams &p, const MatchingOptions &opts = {});

}  // namespace tlsphot

#endif
