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

#include "tlsphot/fft.h"

#include <fftw3.h>

#include <algorithm>
#include <memory>
#include <mutex>
#include <unordered_map>

namespace tlsphot {

namespace {

// FFTW's planner is not thread safe; execution is.
std::mutex &planner_mutex() {
    static std::mutex m;
    return m;
}

struct Workspace {
    size_t n;
    fftw_complex *a;
    fftw_complex *b;
    fftw_plan forward;
    fftw_plan backward;

    explicit Workspace(size_t size) : n(size) {
        std::lock_guard<std::mutex> lock(planner_mutex());
        a = fftw_alloc_complex(n);
        b = fftw_alloc_complex(n);
        forward = fftw_plan_dft_1d((int)n, a, a, FFTW_FORWARD, FFTW_ESTIMATE);
        backward = fftw_plan_dft_1d((int)n, a, a, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    ~Workspace() {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(forward);
        fftw_destroy_plan(backward);
        fftw_free(a);
        fftw_free(b);
    }
    Workspace(const Workspace &) = delete;
    Workspace &operator=(const Workspace &) = delete;
};

Workspace &workspace(size_t n) {
    thread_local std::unordered_map<size_t, std::unique_ptr<Workspace>> cache;
    auto &slot = cache[n];
    if (!slot) {
        slot = std::make_unique<Workspace>(n);
    }
    return *slot;
}

size_t padded_size(size_t n) {
    size_t p = 1;
    while (p < n) {
        p <<= 1;
    }
    return p;
}

void load(fftw_complex *dst, std::span<const cplx> src, size_t n) {
    auto *out = reinterpret_cast<cplx *>(dst);
    std::copy(src.begin(), src.end(), out);
    std::fill(out + src.size(), out + n, cplx{0, 0});
}

CVec convolve_direct(std::span<const cplx> a, std::span<const cplx> b) {
    CVec c(a.size() + b.size() - 1, cplx{0, 0});
    for (size_t i = 0; i < a.size(); i++) {
        for (size_t j = 0; j < b.size(); j++) {
            c[i + j] += a[i] * b[j];
        }
    }
    return c;
}

}  // namespace

CVec convolve(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.empty() || b.empty()) {
        return {};
    }
    if (a.size() * b.size() <= 4096) {
        return convolve_direct(a, b);
    }
    size_t len = a.size() + b.size() - 1;
    Workspace &ws = workspace(padded_size(len));
    load(ws.a, a, ws.n);
    load(ws.b, b, ws.n);
    fftw_execute_dft(ws.forward, ws.a, ws.a);
    fftw_execute_dft(ws.forward, ws.b, ws.b);
    auto *x = reinterpret_cast<cplx *>(ws.a);
    auto *y = reinterpret_cast<cplx *>(ws.b);
    for (size_t k = 0; k < ws.n; k++) {
        x[k] *= y[k];
    }
    fftw_execute_dft(ws.backward, ws.a, ws.a);
    double scale = 1.0 / (double)ws.n;
    CVec c(len);
    for (size_t k = 0; k < len; k++) {
        c[k] = x[k] * scale;
    }
    return c;
}

CVec correlate_sum(std::span<const cplx> u, std::span<const cplx> sum_fn) {
    size_t n = u.size();
    if (n == 0) {
        return {};
    }
    if (sum_fn.size() != 2 * n - 1) {
        throw std::invalid_argument("correlate_sum: sum-grid function must have length 2n-1");
    }
    CVec rev(u.rbegin(), u.rend());
    CVec full = convolve(rev, sum_fn);
    return CVec(full.begin() + (std::ptrdiff_t)(n - 1), full.begin() + (std::ptrdiff_t)(2 * n - 1));
}

}  // namespace tlsphot
