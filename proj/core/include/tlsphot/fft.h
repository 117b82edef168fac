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

#ifndef TLSPHOT_FFT_H
#define TLSPHOT_FFT_H

#include <complex>
#include <span>
#include <vector>

namespace tlsphot {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;

/// Full linear convolution, c[m] = sum_k a[k] b[m-k], length a.size() + b.size() - 1.
CVec convolve(std::span<const cplx> a, std::span<const cplx> b);

/// Windowed correlation against a sum-grid function.
///
/// Given u of length n and J of length 2n-1 returns r[j] = sum_i u[i] J[i+j] for j in [0, n).
CVec correlate_sum(std::span<const cplx> u, std::span<const cplx> sum_fn);

}  // namespace tlsphot

#endif
