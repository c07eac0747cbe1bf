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

// Serial reference path for the metrics engine. Kept deliberately naive so
// tests and the benchmark have an independent baseline for the OpenMP kernel.

#include "hoaa/error.hpp"
#include "metrics_detail.hpp"

namespace hoaa {

std::vector<ErrorSample> collect_samples(const InputDomain& domain, const Kernel& approx,
                                         const Kernel& exact, const TrialPlan& plan) {
  domain.validate();
  plan.validate();
  if (plan.method == Method::kExhaustive && domain.total_bits() > kMaxExhaustiveBits) {
    throw Error(ErrorCode::kTooLargeDomain, "exhaustive domain too large; use Monte Carlo");
  }
  const detail::OperandLayout layout(domain);
  const std::uint64_t n = detail::sample_count(domain, plan);
  std::vector<ErrorSample> samples;
  samples.reserve(n);
  std::vector<std::uint64_t> ops(layout.arity());
  for (std::uint64_t i = 0; i < n; ++i) {
    layout.fill(plan, i, ops);
    const std::int64_t e = exact(ops);
    const std::int64_t a = approx(ops);
    samples.push_back({e, a, static_cast<std::int64_t>(detail::wrap_ed(a - e, plan.wrap_bits))});
  }
  return samples;
}

ErrorReport summarize(std::span<const ErrorSample> samples, int width, Method method,
                      std::optional<std::uint64_t> seed, int wrap_bits) {
  detail::Accumulator acc;
  acc.wrap_bits = wrap_bits;
  for (const auto& s : samples) acc.add(s.exact, s.approx);
  return acc.finish(width, method, seed);
}

ErrorReport evaluate_serial(const InputDomain& domain, const Kernel& approx, const Kernel& exact,
                            const TrialPlan& plan) {
  domain.validate();
  plan.validate();
  if (plan.method == Method::kExhaustive && domain.total_bits() > kMaxExhaustiveBits) {
    throw Error(ErrorCode::kTooLargeDomain, "exhaustive domain too large; use Monte Carlo");
  }
  const detail::OperandLayout layout(domain);
  const std::uint64_t n = detail::sample_count(domain, plan);
  std::vector<std::uint64_t> ops(layout.arity());
  detail::Accumulator acc;
  acc.wrap_bits = plan.wrap_bits;
  for (std::uint64_t i = 0; i < n; ++i) {
    layout.fill(plan, i, ops);
    acc.add(exact(ops), approx(ops));
  }
  return acc.finish(plan.width, plan.method, detail::report_seed(plan));
}

}  // namespace hoaa
