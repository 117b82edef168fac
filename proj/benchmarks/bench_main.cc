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

#include <benchmark/benchmark.h>

#include <cmath>

#include "tlsphot/tlsphot.h"

using namespace tlsphot;

namespace {

OnePhotonAmp pulse_on(int n, double sigma) {
    GridPtr g = make_grid(std::max(25 * sigma, 25.0) * std::max(1.0, (n - 1) / 4000.0), n);
    return make_pulse({PulseKind::kLorentzian, sigma, 0.0}, g);
}

void BM_Convolve(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    OnePhotonAmp f = pulse_on(n, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(convolve(f.values(), f.values()));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_Convolve)->Arg(1025)->Arg(2049)->Arg(4097)->Arg(8193)->Arg(16385)->Complexity();

void BM_ScatterTwo(benchmark::State &state) {
    OnePhotonAmp f = pulse_on(static_cast<int>(state.range(0)), 1.25);
    TwoPhotonAmp psi = product_state(f);
    TlsParams p{1.0, 0.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(scatter_two(p, psi));
    }
}
BENCHMARK(BM_ScatterTwo)->Arg(2001)->Arg(4001)->Arg(8001)->Unit(benchmark::kMillisecond);

void BM_EtaNumeric(benchmark::State &state) {
    OnePhotonAmp f = pulse_on(static_cast<int>(state.range(0)), 0.5);
    TlsParams p{1.0, 0.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(eta_numeric(p, f));
    }
}
BENCHMARK(BM_EtaNumeric)->Arg(4001)->Arg(8001)->Unit(benchmark::kMillisecond);

void BM_MatchingSigma(benchmark::State &state) {
    TlsParams p{0.95, 1 / 0.95 - 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(matching_sigma(p, Branch::kUpper));
    }
}
BENCHMARK(BM_MatchingSigma)->Unit(benchmark::kMicrosecond);

void BM_NsGate(benchmark::State &state) {
    OperatingPoint op = make_operating_point(TlsParams{1.0, 0.0});
    double r3 = 1 / std::sqrt(3.0);
    FewPhotonState in = FewPhotonState::vacuum(op.grid, {{"s"}});
    in.set_vacuum_amp(r3);
    in.add_single(0, op.mode, r3);
    in.add_two_photons(0, op.mode, r3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ns_gate(in, 0, op));
    }
}
BENCHMARK(BM_NsGate)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
