// Copyright 2026 The HOAA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference versus OpenMP kernel for the metrics engine.

#include <benchmark/benchmark.h>

#include "hoaa/cases.hpp"
#include "hoaa/metrics.hpp"

namespace {

hoaa::CaseStudy add_case(int width) {
  hoaa::CaseOptions opt;
  opt.kind = hoaa::CaseKind::kAdd;
  opt.chain = hoaa::ChainConfig{width, 2, hoaa::P1AVariant::kApprox};
  return hoaa::make_case(opt);
}

hoaa::CaseStudy subtract_case(int width) {
  hoaa::CaseOptions opt;
  opt.kind = hoaa::CaseKind::kSubtract;
  opt.chain = hoaa::ChainConfig{width, 1, hoaa::P1AVariant::kApprox};
  return hoaa::make_case(opt);
}

void BM_ExhaustiveAddSerial(benchmark::State& state) {
  const auto c = add_case(static_cast<int>(state.range(0)));
  const auto plan = c.exhaustive();
  for (auto _ : state) {
    benchmark::DoNotOptimize(hoaa::evaluate_serial(c.domain, c.approx, c.exact, plan));
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (2 * state.range(0))));
}

void BM_ExhaustiveAddParallel(benchmark::State& state) {
  const auto c = add_case(static_cast<int>(state.range(0)));
  const auto plan = c.exhaustive();
  for (auto _ : state) {
    benchmark::DoNotOptimize(hoaa::evaluate(c.domain, c.approx, c.exact, plan));
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (2 * state.range(0))));
}

void BM_MonteCarloSubtractSerial(benchmark::State& state) {
  const auto c = subtract_case(16);
  const auto plan = c.monte_carlo(42, static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hoaa::evaluate_serial(c.domain, c.approx, c.exact, plan));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_MonteCarloSubtractParallel(benchmark::State& state) {
  const auto c = subtract_case(16);
  const auto plan = c.monte_carlo(42, static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hoaa::evaluate(c.domain, c.approx, c.exact, plan));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_ExhaustiveAddSerial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExhaustiveAddParallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarloSubtractSerial)->Arg(1 << 16)->Arg(1 << 18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarloSubtractParallel)->Arg(1 << 16)->Arg(1 << 18)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
