/*
   Copyright 2026 The Skyburst Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include "skyburst/skyburst.hpp"

using namespace skyburst;

namespace {

const Omega kOmega = Omega::parse("22/7");

void BM_ConstructExact(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(construct<Rational>(n, kOmega));
}
BENCHMARK(BM_ConstructExact)->RangeMultiplier(2)->Range(4, 64);

void BM_ConstructDeterminantal(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(construct_determinantal<Rational>(n, kOmega));
}
BENCHMARK(BM_ConstructDeterminantal)->DenseRange(4, 16, 4);

void BM_ToeplitzDirect(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(toeplitz_det_direct<Rational>(n, kOmega));
}
BENCHMARK(BM_ToeplitzDirect)->DenseRange(4, 16, 4);

void BM_ToeplitzClosed(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(toeplitz_det_closed<Rational>(n, kOmega));
}
BENCHMARK(BM_ToeplitzClosed)->DenseRange(4, 16, 4);

void BM_FindZeros(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    const auto p = float_coefficients(n, 3.37);
    for (auto _ : state) benchmark::DoNotOptimize(find_zeros(p));
}
BENCHMARK(BM_FindZeros)->RangeMultiplier(2)->Range(4, 32);

void BM_VerifyIdentity(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_identity(IdentityId::LiftingCorrected, n, kOmega));
}
BENCHMARK(BM_VerifyIdentity)->DenseRange(2, 10, 4);

void BM_Trace(benchmark::State& state) {
    TraceOptions opts;
    opts.threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(trace(9, 0.05, 8.95, 0.02, 0.1, opts));
}
BENCHMARK(BM_Trace)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
