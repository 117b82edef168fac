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

#include "tlsphot/two_photon.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "tlsphot/errors.h"
#include "tlsphot/spectral_op.h"

namespace tlsphot {

namespace {

void check_term(const SpectralGrid &g, const JointTerm &t) {
    if (!t.first || !t.second || (int)t.first->size() != g.size() || (int)t.second->size() != g.size()) {
        throw std::invalid_argument("joint term vectors must match the grid");
    }
    if (t.sum && (int)t.sum->size() != g.sum_size()) {
        throw std::invalid_argument("joint term sum function must live on the 2n-1 sum grid");
    }
}

double max_abs(const CVec &v) {
    double m = 0;
    for (const auto &x : v) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

// sum_ij w_i w_j conj(x_ij) y_ij for single unit-coefficient terms.
cplx pair_inner(const JointTerm &x, const JointTerm &y, const std::vector<double> &w) {
    size_t n = w.size();
    CVec u(n), v(n);
    for (size_t i = 0; i < n; i++) {
        u[i] = w[i] * std::conj((*x.first)[i]) * (*y.first)[i];
        v[i] = w[i] * std::conj((*x.second)[i]) * (*y.second)[i];
    }
    if (!x.sum && !y.sum) {
        return std::accumulate(u.begin(), u.end(), cplx{0, 0}) * std::accumulate(v.begin(), v.end(), cplx{0, 0});
    }
    CVec c = convolve(u, v);
    cplx acc{0, 0};
    for (size_t m = 0; m < c.size(); m++) {
        cplx k{1, 0};
        if (x.sum) {
            k = std::conj((*x.sum)[m]);
        }
        if (y.sum) {
            k *= (*y.sum)[m];
        }
        acc += k * c[m];
    }
    return acc;
}

}  // namespace

JointAmp::JointAmp(GridPtr grid) : grid_(std::move(grid)) {
    if (!grid_) {
        throw std::invalid_argument("joint amplitude needs a grid");
    }
}

JointAmp JointAmp::product(const OnePhotonAmp &first, const OnePhotonAmp &second, cplx coef) {
    require_same_grid(first.grid(), second.grid());
    JointAmp r(first.grid());
    r.add_term({coef, first.shared_values(), second.shared_values(), nullptr});
    return r;
}

JointAmp JointAmp::from_dense(GridPtr grid, const std::vector<CVec> &psi) {
    int n = grid->size();
    if ((int)psi.size() != n) {
        throw std::invalid_argument("dense amplitude must be n x n");
    }
    JointAmp r(grid);
    for (int i = 0; i < n; i++) {
        if ((int)psi[i].size() != n) {
            throw std::invalid_argument("dense amplitude must be n x n");
        }
        CVec e(n, cplx{0, 0});
        e[i] = 1;
        r.add_term({1.0, share(std::move(e)), share(psi[i]), nullptr});
    }
    return r;
}

void JointAmp::add_term(JointTerm term) {
    check_term(*grid_, term);
    if (term.coef == cplx{0, 0}) {
        return;
    }
    terms_.push_back(std::move(term));
}

void JointAmp::add(const JointAmp &other, cplx scale) {
    require_same_grid(grid_, other.grid_);
    if (scale == cplx{0, 0}) {
        return;
    }
    for (const auto &t : other.terms_) {
        JointTerm c = t;
        c.coef *= scale;
        terms_.push_back(std::move(c));
    }
}

JointAmp JointAmp::scaled(cplx factor) const {
    JointAmp r(grid_);
    r.add(*this, factor);
    return r;
}

JointAmp JointAmp::swapped() const {
    JointAmp r(grid_);
    for (const auto &t : terms_) {
        r.terms_.push_back({t.coef, t.second, t.first, t.sum});
    }
    return r;
}

cplx JointAmp::at(int i, int j) const {
    cplx acc{0, 0};
    for (const auto &t : terms_) {
        cplx v = t.coef * (*t.first)[i] * (*t.second)[j];
        if (t.sum) {
            v *= (*t.sum)[i + j];
        }
        acc += v;
    }
    return acc;
}

std::vector<CVec> JointAmp::to_dense() const {
    int n = grid_->size();
    std::vector<CVec> d(n, CVec(n, cplx{0, 0}));
    for (const auto &t : terms_) {
        for (int i = 0; i < n; i++) {
            cplx a = t.coef * (*t.first)[i];
            for (int j = 0; j < n; j++) {
                cplx v = a * (*t.second)[j];
                if (t.sum) {
                    v *= (*t.sum)[i + j];
                }
                d[i][j] += v;
            }
        }
    }
    return d;
}

double JointAmp::norm_sq() const {
    const auto &w = grid_->weights();
    double acc = 0;
    for (size_t x = 0; x < terms_.size(); x++) {
        const JointTerm &tx = terms_[x];
        acc += std::norm(tx.coef) * pair_inner(tx, tx, w).real();
        for (size_t y = x + 1; y < terms_.size(); y++) {
            const JointTerm &ty = terms_[y];
            acc += 2 * (std::conj(tx.coef) * ty.coef * pair_inner(tx, ty, w)).real();
        }
    }
    return acc;
}

void JointAmp::compress() {
    using Key = std::tuple<const CVec *, const CVec *, const CVec *>;

    // Identical vector triples.
    std::map<Key, size_t> seen;
    std::vector<JointTerm> merged;
    for (auto &t : terms_) {
        Key k{t.first.get(), t.second.get(), t.sum.get()};
        auto it = seen.find(k);
        if (it == seen.end()) {
            seen.emplace(k, merged.size());
            merged.push_back(t);
        } else {
            merged[it->second].coef += t.coef;
        }
    }

    // Terms sharing one side and the sum function collapse into one.
    auto combine = [](std::vector<JointTerm> &in, bool share_first) {
        using Key2 = std::pair<const CVec *, const CVec *>;
        std::map<Key2, std::vector<size_t>> groups;
        std::vector<Key2> order;
        for (size_t i = 0; i < in.size(); i++) {
            Key2 k{share_first ? in[i].first.get() : in[i].second.get(), in[i].sum.get()};
            auto [it, inserted] = groups.try_emplace(k);
            if (inserted) {
                order.push_back(k);
            }
            it->second.push_back(i);
        }
        std::vector<JointTerm> out;
        for (const auto &k : order) {
            const auto &idx = groups[k];
            if (idx.size() == 1) {
                out.push_back(in[idx[0]]);
                continue;
            }
            const JointTerm &head = in[idx[0]];
            size_t n = head.first->size();
            CVec acc(n, cplx{0, 0});
            for (size_t i : idx) {
                const CVec &v = share_first ? *in[i].second : *in[i].first;
                for (size_t j = 0; j < n; j++) {
                    acc[j] += in[i].coef * v[j];
                }
            }
            VecPtr combined = share(std::move(acc));
            if (share_first) {
                out.push_back({1.0, head.first, combined, head.sum});
            } else {
                out.push_back({1.0, combined, head.second, head.sum});
            }
        }
        in = std::move(out);
    };
    combine(merged, true);
    combine(merged, false);

    // Rounding-level terms.
    std::map<const CVec *, double> peak;
    auto peak_of = [&](const VecPtr &v) {
        if (!v) {
            return 1.0;
        }
        auto it = peak.find(v.get());
        if (it != peak.end()) {
            return it->second;
        }
        double m = max_abs(*v);
        peak.emplace(v.get(), m);
        return m;
    };
    std::vector<double> scale(merged.size());
    double top = 0;
    for (size_t i = 0; i < merged.size(); i++) {
        const auto &t = merged[i];
        scale[i] = std::abs(t.coef) * peak_of(t.first) * peak_of(t.second) * peak_of(t.sum);
        top = std::max(top, scale[i]);
    }
    terms_.clear();
    for (size_t i = 0; i < merged.size(); i++) {
        if (scale[i] > 1e-15 * top) {
            terms_.push_back(std::move(merged[i]));
        }
    }
}

cplx inner(const JointAmp &a, const JointAmp &b) {
    require_same_grid(a.grid(), b.grid());
    const auto &w = a.grid()->weights();
    cplx acc{0, 0};
    for (const auto &x : a.terms()) {
        for (const auto &y : b.terms()) {
            acc += std::conj(x.coef) * y.coef * pair_inner(x, y, w);
        }
    }
    return acc;
}

OnePhotonAmp contract_first(const OnePhotonAmp &g, const JointAmp &psi) {
    require_same_grid(g.grid(), psi.grid());
    const auto &w = psi.grid()->weights();
    size_t n = w.size();
    CVec x(n, cplx{0, 0});
    for (const auto &t : psi.terms()) {
        CVec u(n);
        for (size_t i = 0; i < n; i++) {
            u[i] = w[i] * std::conj(g[(int)i]) * (*t.first)[i];
        }
        if (!t.sum) {
            cplx s = t.coef * std::accumulate(u.begin(), u.end(), cplx{0, 0});
            for (size_t j = 0; j < n; j++) {
                x[j] += s * (*t.second)[j];
            }
        } else {
            CVec r = correlate_sum(u, *t.sum);
            for (size_t j = 0; j < n; j++) {
                x[j] += t.coef * (*t.second)[j] * r[j];
            }
        }
    }
    return OnePhotonAmp(psi.grid(), std::move(x));
}

OnePhotonAmp contract_second(const OnePhotonAmp &g, const JointAmp &psi) {
    return contract_first(g, psi.swapped());
}

double symmetry_defect(const JointAmp &psi) {
    double n = psi.norm_sq();
    if (n <= 0) {
        return 0;
    }
    double d = 2 * n - 2 * inner(psi, psi.swapped()).real();
    return std::max(0.0, d) / n;
}

TwoPhotonAmp::TwoPhotonAmp(GridPtr grid) : joint_(std::move(grid)) {
}

TwoPhotonAmp::TwoPhotonAmp(JointAmp psi) : joint_(std::move(psi)) {
}

TwoPhotonAmp TwoPhotonAmp::checked(JointAmp psi, double tol) {
    double d = symmetry_defect(psi);
    if (d > tol) {
        throw AsymmetricAmplitudeError("two-photon amplitude is not exchange symmetric (relative defect " +
                                       std::to_string(d) + ")");
    }
    return TwoPhotonAmp(std::move(psi));
}

TwoPhotonAmp TwoPhotonAmp::symmetrized(const JointAmp &psi) {
    JointAmp s = psi.scaled(0.5);
    s.add(psi.swapped(), 0.5);
    s.compress();
    return TwoPhotonAmp(std::move(s));
}

TwoPhotonAmp TwoPhotonAmp::trusted(JointAmp psi) {
    return TwoPhotonAmp(std::move(psi));
}

TwoPhotonAmp TwoPhotonAmp::scaled(cplx factor) const {
    return TwoPhotonAmp(joint_.scaled(factor));
}

TwoPhotonAmp TwoPhotonAmp::operator+(const TwoPhotonAmp &other) const {
    JointAmp s = joint_;
    s.add(other.joint_);
    s.compress();
    return TwoPhotonAmp(std::move(s));
}

TwoPhotonAmp TwoPhotonAmp::operator-(const TwoPhotonAmp &other) const {
    return *this + other.scaled(-1.0);
}

TwoPhotonAmp product_state(const OnePhotonAmp &f) {
    return TwoPhotonAmp::trusted(JointAmp::product(f, f));
}

cplx inner2(const TwoPhotonAmp &a, const TwoPhotonAmp &b) {
    return inner(a.joint(), b.joint());
}

TwoPhotonAmp time_reverse(const TwoPhotonAmp &psi) {
    SpectralOp r = SpectralOp::reflection();
    return TwoPhotonAmp::trusted(apply_pair(r, r, psi.joint()));
}

}  // namespace tlsphot
