/*
 * Copyright 2026 The hhoforms Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Serial, parallel and reference kernels on catalog metrics.

#include <benchmark/benchmark.h>

#include "hho/catalog.hpp"
#include "hho/diagnostics.hpp"
#include "hho/polymatrix.hpp"
#include "hho/random.hpp"
#include "hho/reference.hpp"

using namespace hho;

namespace {

const ParamValues kLambdas{{"lambda1", 2}, {"lambda2", -1}, {"lambda3", 3}, {"lambda4", Rational(1, 2)}};

const Hho2& n8() {
  static const Hho2 op = build("n8-fam1", kLambdas);
  return op;
}

const Hho2& n6() {
  static const Hho2 op = build("n6-X");
  return op;
}

void BM_PfaffianSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pfaffian(n8().metric(), Execution::serial));
}
void BM_PfaffianParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pfaffian(n8().metric(), Execution::parallel));
}
void BM_PfaffianReference(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reference::pfaffian_expansion(n8().metric()));
}

void BM_DetSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(det_bareiss(n6().metric(), Execution::serial));
}
void BM_DetParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(det_bareiss(n6().metric(), Execution::parallel));
}
void BM_DetReference(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reference::det_laplace(n6().metric()));
}

void BM_SkewInverse(benchmark::State& state) {
  const Execution exec = state.range(0) ? Execution::parallel : Execution::serial;
  for (auto _ : state) benchmark::DoNotOptimize(inverse_skew(n8().metric(), exec));
}

void BM_Diagnose(benchmark::State& state) {
  const Execution exec = state.range(0) ? Execution::parallel : Execution::serial;
  Rng rng(5);
  const auto sys = generate_flux(n6(), random_flux_params(rng, 6));
  const auto points = sample_points(n6(), 8, rng);
  for (auto _ : state) benchmark::DoNotOptimize(diagnose(sys, points, exec));
}

void BM_CharpolySquare(benchmark::State& state) {
  Rng rng(6);
  const auto sys = generate_flux(build("n6-VIII"), random_flux_params(rng, 6));
  for (auto _ : state) benchmark::DoNotOptimize(charpoly_square(sys));
}

}  // namespace

BENCHMARK(BM_PfaffianSerial)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_PfaffianParallel)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_PfaffianReference)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_DetSerial)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_DetParallel)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_DetReference)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SkewInverse)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Diagnose)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CharpolySquare)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
