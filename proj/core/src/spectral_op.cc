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

#include "tlsphot/spectral_op.h"

#include <mutex>
#include <numeric>
#include <unordered_map>

#include "tlsphot/errors.h"

namespace tlsphot {

struct SpectralOp::Memo {
    std::mutex lock;
    std::unordered_map<const CVec *, std::pair<VecPtr, VecPtr>> images;
    std::unordered_map<const CVec *, std::pair<VecPtr, cplx>> overlaps;
};

SpectralOp::SpectralOp(Kind kind, cplx factor) : kind_(kind), factor_(factor), memo_(std::make_shared<Memo>()) {
}

SpectralOp SpectralOp::identity() {
    return scale(1.0);
}

SpectralOp SpectralOp::scale(cplx factor) {
    return SpectralOp(Kind::kScale, factor);
}

SpectralOp SpectralOp::diagonal(CVec factor, cplx scale) {
    SpectralOp op(Kind::kDiagonal, scale);
    op.diag_ = share(std::move(factor));
    return op;
}

SpectralOp SpectralOp::projector(const OnePhotonAmp &out, const OnePhotonAmp &in, cplx scale) {
    require_same_grid(out.grid(), in.grid());
    SpectralOp op(Kind::kProjector, scale);
    op.out_ = out.shared_values();
    op.in_ = std::make_shared<const OnePhotonAmp>(in);
    return op;
}

SpectralOp SpectralOp::reflection(cplx scale) {
    return SpectralOp(Kind::kReflection, scale);
}

VecPtr SpectralOp::map_vector(const VecPtr &v) const {
    if (kind_ == Kind::kScale) {
        return v;
    }
    if (kind_ == Kind::kProjector) {
        throw std::logic_error("map_vector is not defined for projectors");
    }
    std::lock_guard<std::mutex> guard(memo_->lock);
    auto it = memo_->images.find(v.get());
    if (it != memo_->images.end()) {
        return it->second.second;
    }
    CVec out(v->size());
    if (kind_ == Kind::kDiagonal) {
        if (v->size() != diag_->size()) {
            throw std::invalid_argument("diagonal map length does not match the amplitude");
        }
        for (size_t i = 0; i < out.size(); i++) {
            out[i] = (*diag_)[i] * (*v)[i];
        }
    } else {
        std::copy(v->rbegin(), v->rend(), out.begin());
    }
    VecPtr image = share(std::move(out));
    memo_->images.emplace(v.get(), std::make_pair(v, image));
    return image;
}

cplx SpectralOp::project(const VecPtr &v) const {
    std::lock_guard<std::mutex> guard(memo_->lock);
    auto it = memo_->overlaps.find(v.get());
    if (it != memo_->overlaps.end()) {
        return it->second.second;
    }
    const auto &w = in_->grid()->weights();
    cplx acc{0, 0};
    for (size_t i = 0; i < v->size(); i++) {
        acc += w[i] * std::conj((*in_)[(int)i]) * (*v)[i];
    }
    memo_->overlaps.emplace(v.get(), std::make_pair(v, acc));
    return acc;
}

OnePhotonAmp SpectralOp::apply(const OnePhotonAmp &f) const {
    if (kind_ == Kind::kProjector) {
        require_same_grid(in_->grid(), f.grid());
        return OnePhotonAmp(f.grid(), out_).scaled(factor_ * project(f.shared_values()));
    }
    if (kind_ == Kind::kReflection && !f.grid()->symmetric()) {
        throw std::invalid_argument("time reversal needs a grid symmetric about zero detuning");
    }
    return OnePhotonAmp(f.grid(), map_vector(f.shared_values())).scaled(factor_);
}

namespace {

using Kind = SpectralOp::Kind;

// Applies op to one side of a term without a sum function.
void apply_side(const SpectralOp &op, cplx &coef, VecPtr &v) {
    if (op.kind() == Kind::kProjector) {
        coef *= op.factor() * op.project(v);
        v = op.out_mode();
    } else {
        coef *= op.factor();
        v = op.map_vector(v);
    }
}

// Projects the first side of a term whose sum function is present, leaving a separable term.
JointTerm project_through_sum(const SpectralOp &op, const JointTerm &t, const std::vector<double> &w) {
    size_t n = w.size();
    const OnePhotonAmp &in = op.in_mode();
    CVec u(n);
    for (size_t i = 0; i < n; i++) {
        u[i] = w[i] * std::conj(in[(int)i]) * (*t.first)[i];
    }
    CVec r = correlate_sum(u, *t.sum);
    for (size_t j = 0; j < n; j++) {
        r[j] *= (*t.second)[j];
    }
    return {t.coef * op.factor(), op.out_mode(), share(std::move(r)), nullptr};
}

}  // namespace

JointAmp apply_pair(const SpectralOp &first_op, const SpectralOp &second_op, const JointAmp &psi) {
    const SpectralGrid &g = *psi.grid();
    if ((first_op.kind() == Kind::kReflection || second_op.kind() == Kind::kReflection) && !g.symmetric()) {
        throw std::invalid_argument("time reversal needs a grid symmetric about zero detuning");
    }
    const auto &w = g.weights();
    SpectralOp reflect = SpectralOp::reflection();
    JointAmp out(psi.grid());
    for (const auto &t : psi.terms()) {
        JointTerm r = t;
        if (t.sum) {
            if (first_op.kind() == Kind::kProjector) {
                r = project_through_sum(first_op, t, w);
                apply_side(second_op, r.coef, r.second);
            } else if (second_op.kind() == Kind::kProjector) {
                JointTerm s{t.coef, t.second, t.first, t.sum};
                s = project_through_sum(second_op, s, w);
                r = {s.coef, s.second, s.first, nullptr};
                apply_side(first_op, r.coef, r.first);
            } else {
                bool f_ref = first_op.kind() == Kind::kReflection;
                bool s_ref = second_op.kind() == Kind::kReflection;
                if (f_ref != s_ref) {
                    throw UnsupportedOperation(
                        "cannot time-reverse one photon of a pair correlated in total detuning");
                }
                apply_side(first_op, r.coef, r.first);
                apply_side(second_op, r.coef, r.second);
                if (f_ref) {
                    r.sum = reflect.map_vector(t.sum);
                }
            }
        } else {
            apply_side(first_op, r.coef, r.first);
            apply_side(second_op, r.coef, r.second);
        }
        if (r.coef != cplx{0, 0}) {
            out.add_term(std::move(r));
        }
    }
    out.compress();
    return out;
}

}  // namespace tlsphot
