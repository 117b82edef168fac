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

#ifndef TLSPHOT_PHOTONIC_STATE_H
#define TLSPHOT_PHOTONIC_STATE_H

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tlsphot/spectral_op.h"
#include "tlsphot/tls.h"

namespace tlsphot {

/// Optical carrier of a rail. Only rails on the same carrier interfere.
enum class Carrier { kOriginal, kSumFrequency };

struct Rail {
    std::string label;
    Carrier carrier = Carrier::kOriginal;
};

using RailPair = std::pair<int, int>;

/// Pure state of at most two photons spread over spatial rails, plus the probability that has
/// been lost to the environment.
///
/// Kets:
///   vacuum          vacuum_amp |0>
///   one photon      int f_r(p) a_r(p)^dag |0>
///   two rails r<s   int int phi_rs(p1, p2) a_r(p1)^dag a_s(p2)^dag |0>
///   same rail r     (1/sqrt2) int int psi_r(p1, p2) a_r(p1)^dag a_r(p2)^dag |0>
/// so every squared ket norm is the quadrature norm of its amplitude.
class FewPhotonState {
   public:
    /// The zero vector.
    FewPhotonState(GridPtr grid, std::vector<Rail> rails);
    static FewPhotonState vacuum(GridPtr grid, std::vector<Rail> rails);

    const GridPtr &grid() const {
        return grid_;
    }
    int num_rails() const {
        return (int)rails_.size();
    }
    const Rail &rail(int r) const;
    const std::vector<Rail> &rails() const {
        return rails_;
    }
    int add_rail(Rail rail);
    int find_rail(const std::string &label) const;

    cplx vacuum_amp() const {
        return vacuum_;
    }
    void set_vacuum_amp(cplx v) {
        vacuum_ = v;
    }
    const std::map<int, OnePhotonAmp> &singles() const {
        return singles_;
    }
    const std::map<RailPair, JointAmp> &pairs() const {
        return pairs_;
    }
    const std::map<int, TwoPhotonAmp> &doubles() const {
        return doubles_;
    }
    std::map<int, OnePhotonAmp> &mutable_singles() {
        return singles_;
    }
    std::map<RailPair, JointAmp> &mutable_pairs() {
        return pairs_;
    }
    std::map<int, TwoPhotonAmp> &mutable_doubles() {
        return doubles_;
    }

    /// Adds coef * f on rail r.
    void add_single(int r, const OnePhotonAmp &f, cplx coef = 1.0);
    /// Adds coef * phi with the first argument on rail r and the second on rail s, r != s.
    void add_pair(int r, int s, const JointAmp &phi, cplx coef = 1.0);
    void add_double(int r, const TwoPhotonAmp &psi, cplx coef = 1.0);

    /// coef |2_f> on rail r.
    void add_two_photons(int r, const OnePhotonAmp &f, cplx coef = 1.0);
    /// coef a_r^dag(f) a_s^dag(g) |0>. For r == s this is sqrt2 |2_f> when f == g.
    void add_photon_pair(int r, int s, const OnePhotonAmp &f, const OnePhotonAmp &g, cplx coef = 1.0);

    double lost_mass() const {
        return lost_;
    }
    void add_lost_mass(double p) {
        lost_ += p;
    }

    /// Squared norm of the retained state.
    double norm_sq() const;
    /// norm_sq() + lost_mass()
    double total_probability() const {
        return norm_sq() + lost_;
    }
    /// Probability of finding photons on rail r.
    double rail_weight(int r) const;
    bool is_empty_rail(int r) const;

    void compress();

   private:
    void check_rail(int r) const;

    GridPtr grid_;
    std::vector<Rail> rails_;
    cplx vacuum_{0, 0};
    std::map<int, OnePhotonAmp> singles_;
    std::map<RailPair, JointAmp> pairs_;
    std::map<int, TwoPhotonAmp> doubles_;
    double lost_ = 0;
};

/// a_from^dag(F) -> sum over entries with this source of a_to^dag(op F).
/// Rails that are never a source are left alone.
struct ModeTransfer {
    int from;
    int to;
    SpectralOp op;
};

FewPhotonState apply_mode_map(const FewPhotonState &state, const std::vector<ModeTransfer> &map);

/// a_i -> cos(theta) a_i + e^{i phi} sin(theta) a_j, a_j -> -e^{-i phi} sin(theta) a_i + cos(theta) a_j.
FewPhotonState beamsplitter(const FewPhotonState &state, int rail_i, int rail_j, double theta, double phi = 0.0);
/// Multiplies the rail's creation operators by e^{i phase}.
FewPhotonState phase_shift(const FewPhotonState &state, int rail, double phase);
/// Amplitude transmission per photon; removed probability goes to lost_mass.
FewPhotonState loss_channel(const FewPhotonState &state, int rail, double amp_transmission);
/// Scatters every photon on the rail off the emitter. With loss the norm deficit goes to lost_mass.
FewPhotonState apply_tls(const FewPhotonState &state, int rail, const TlsParams &p);
/// Traces out a rail: everything with photons on it becomes lost_mass and the rail is removed.
FewPhotonState discard_rail(const FewPhotonState &state, int rail);

/// Photon count per rail.
using DetectionPattern = std::vector<int>;
/// Pattern with one count for each listed rail (a rail listed twice holds two photons).
DetectionPattern make_pattern(int num_rails, std::initializer_list<int> occupied);
double project_detection(const FewPhotonState &state, const DetectionPattern &pattern);
/// All patterns with nonzero probability.
std::map<DetectionPattern, double> detection_distribution(const FewPhotonState &state);

cplx state_inner(const FewPhotonState &a, const FewPhotonState &b);
/// |<target|state>|^2 / (|target|^2 |state|^2). Lost probability is reported separately.
double fidelity(const FewPhotonState &state, const FewPhotonState &target);

}  // namespace tlsphot

#endif
