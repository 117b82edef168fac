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

#ifndef TLSPHOT_TWO_PHOTON_H
#define TLSPHOT_TWO_PHOTON_H

#include <vector>

#include "tlsphot/one_photon.h"

namespace tlsphot {

/// coef * first(p1) * second(p2) * sum(p1 + p2). A null sum stands for the constant 1.
struct JointTerm {
    cplx coef{1, 0};
    VecPtr first;
    VecPtr second;
    VecPtr sum;
};

/// Joint spectral amplitude of two photons in distinguishable modes, stored as a sum of
/// separable terms optionally modulated by a function of the total detuning.
///
/// Every operation the simulator needs maps this form to itself, and all reductions run in
/// O(n log n) per pair of terms.
class JointAmp {
   public:
    explicit JointAmp(GridPtr grid);

    static JointAmp product(const OnePhotonAmp &first, const OnePhotonAmp &second, cplx coef = 1.0);
    /// From samples psi[i][j]. Meant for small grids.
    static JointAmp from_dense(GridPtr grid, const std::vector<CVec> &psi);

    const GridPtr &grid() const {
        return grid_;
    }
    const std::vector<JointTerm> &terms() const {
        return terms_;
    }
    bool empty() const {
        return terms_.empty();
    }
    size_t num_terms() const {
        return terms_.size();
    }

    void add_term(JointTerm term);
    void add(const JointAmp &other, cplx scale = 1.0);

    JointAmp scaled(cplx factor) const;
    /// psi(p1, p2) -> psi(p2, p1)
    JointAmp swapped() const;

    cplx at(int i, int j) const;
    std::vector<CVec> to_dense() const;
    double norm_sq() const;

    /// Merges terms sharing vectors and drops terms below rounding level.
    void compress();

   private:
    GridPtr grid_;
    std::vector<JointTerm> terms_;
};

/// sum_ij w_i w_j conj(a_ij) b_ij
cplx inner(const JointAmp &a, const JointAmp &b);

/// x(p2) = sum_i w_i conj(g_i) psi(i, p2)
OnePhotonAmp contract_first(const OnePhotonAmp &g, const JointAmp &psi);
/// x(p1) = sum_j w_j conj(g_j) psi(p1, j)
OnePhotonAmp contract_second(const OnePhotonAmp &g, const JointAmp &psi);

/// |psi - swap(psi)|^2 / |psi|^2
double symmetry_defect(const JointAmp &psi);

/// Bosonic pair amplitude on one rail: psi(p1, p2) = psi(p2, p1). The squared ket norm is the
/// quadrature norm of psi, so f (x) f is the normalized two-photon Fock state of mode f.
class TwoPhotonAmp {
   public:
    explicit TwoPhotonAmp(GridPtr grid);

    /// Throws AsymmetricAmplitudeError when the relative symmetry defect exceeds tol.
    static TwoPhotonAmp checked(JointAmp psi, double tol = 1e-9);
    static TwoPhotonAmp symmetrized(const JointAmp &psi);
    /// The caller guarantees symmetry.
    static TwoPhotonAmp trusted(JointAmp psi);

    const GridPtr &grid() const {
        return joint_.grid();
    }
    const JointAmp &joint() const {
        return joint_;
    }
    bool empty() const {
        return joint_.empty();
    }
    cplx at(int i, int j) const {
        return joint_.at(i, j);
    }
    double norm_sq() const {
        return joint_.norm_sq();
    }
    TwoPhotonAmp scaled(cplx factor) const;
    TwoPhotonAmp operator+(const TwoPhotonAmp &other) const;
    TwoPhotonAmp operator-(const TwoPhotonAmp &other) const;

   private:
    explicit TwoPhotonAmp(JointAmp psi);
    JointAmp joint_;
};

/// psi(i, j) = f_i f_j
TwoPhotonAmp product_state(const OnePhotonAmp &f);
cplx inner2(const TwoPhotonAmp &a, const TwoPhotonAmp &b);
/// psi(i, j) -> psi(mirror(i), mirror(j))
TwoPhotonAmp time_reverse(const TwoPhotonAmp &psi);

}  // namespace tlsphot

#endif
