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

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>

#include "hoaa/error.hpp"
#include "metrics_detail.hpp"

namespace hoaa {

std::string_view to_string(Method method) {
  return method == Method::kExhaustive ? "exhaustive" : "monte-carlo";
}

Method method_from_string(std::string_view name) {
  if (name == "exhaustive") return Method::kExhaustive;
  if (name == "monte-carlo") return Method::kMonteCarlo;
  throw Error(ErrorCode::kInvalidInput, "unknown method '" + std::string(name) + "'");
}

int InputDomain::total_bits() const {
  int total = 0;
  for (int w : operand_widths) total += w;
  return total;
}

void InputDomain::validate() const {
  if (operand_widths.empty()) {
    throw Error(ErrorCode::kConfiguration, "input domain has no operands");
  }
  for (int w : operand_widths) {
    if (w < 1 || w > 64) {
      throw Error(ErrorCode::kConfiguration,
                  "operand width must be in [1, 64], got " + std::to_string(w));
    }
  }
}

TrialPlan TrialPlan::exhaustive(int width) {
  TrialPlan plan;
  plan.method = Method::kExhaustive;
  plan.width = width;
  return plan;
}

TrialPlan TrialPlan::monte_carlo(int width, std::uint64_t seed,
                                 std::optional<std::uint64_t> trials) {
  TrialPlan plan;
  plan.method = Method::kMonteCarlo;
  plan.width = width;
  plan.seed = seed;
  plan.trials = trials.value_or(width < 63 ? std::uint64_t{1} << (width + 1) : 0);
  return plan;
}

void TrialPlan::validate() const {
  if (width < 1 || width > 64) {
    throw Error(ErrorCode::kConfiguration, "plan width must be in [1, 64]");
  }
  if (method == Method::kMonteCarlo && trials < 1) {
    throw Error(ErrorCode::kConfiguration, "Monte Carlo needs at least one trial");
  }
  if (workers < 0) throw Error(ErrorCode::kConfiguration, "workers must be >= 0");
  if (wrap_bits < 0 || wrap_bits > 64) {
    throw Error(ErrorCode::kConfiguration, "wrap bits must be in [0, 64]");
  }
}

namespace {

constexpr std::uint64_t kBlock = 4096;

void check(const InputDomain& domain, const TrialPlan& plan) {
  domain.validate();
  plan.validate();
  if (plan.method == Method::kExhaustive && domain.total_bits() > kMaxExhaustiveBits) {
    throw Error(ErrorCode::kTooLargeDomain,
                "exhaustive domain of 2^" + std::to_string(domain.total_bits()) +
                    " inputs exceeds 2^" + std::to_string(kMaxExhaustiveBits) +
                    "; use Monte Carlo");
  }
}

}  // namespace

ErrorReport evaluate(const InputDomain& domain, const Kernel& approx, const Kernel& exact,
                     const TrialPlan& plan) {
  check(domain, plan);
  const detail::OperandLayout layout(domain);
  const std::uint64_t n = detail::sample_count(domain, plan);
  const std::uint64_t blocks = (n + kBlock - 1) / kBlock;
  std::vector<detail::Accumulator> partial(blocks);
  std::vector<std::exception_ptr> failures(blocks);
  const int workers = plan.workers > 0 ? plan.workers : omp_get_max_threads();

#pragma omp parallel num_threads(workers)
  {
    std::vector<std::uint64_t> ops(layout.arity());
#pragma omp for schedule(dynamic, 4)
    for (std::int64_t blk = 0; blk < static_cast<std::int64_t>(blocks); ++blk) {
      detail::Accumulator acc;
      acc.wrap_bits = plan.wrap_bits;
      const std::uint64_t begin = static_cast<std::uint64_t>(blk) * kBlock;
      const std::uint64_t end = std::min(n, begin + kBlock);
      try {
        for (std::uint64_t i = begin; i < end; ++i) {
          layout.fill(plan, i, ops);
          acc.add(exact(ops), approx(ops));
        }
      } catch (...) {
        failures[static_cast<std::size_t>(blk)] = std::current_exception();
      }
      partial[static_cast<std::size_t>(blk)] = acc;
    }
  }
  // The lowest failing block wins, matching what the serial path would raise.
  for (const auto& e : failures) {
    if (e) std::rethrow_exception(e);
  }

  detail::Accumulator total;
  total.wrap_bits = plan.wrap_bits;
  for (const auto& p : partial) total.merge(p);
  return total.finish(plan.width, plan.method, detail::report_seed(plan));
}

double med_standard_error(const ErrorReport& report) {
  if (report.n_samples == 0) return 0.0;
  const double var = std::max(0.0, report.mse - report.med * report.med);
  return std::sqrt(var / static_cast<double>(report.n_samples));
}

Tolerances Tolerances::uniform(double tol) { return {tol, tol, tol, tol, tol, tol, tol}; }

ComparisonVerdict compare_reports(const ErrorReport& a, const ErrorReport& b,
                                  const Tolerances& tol) {
  if (a.width != b.width) {
    throw Error(ErrorCode::kWidthMismatch, "cannot compare reports of width " +
                                               std::to_string(a.width) + " and " +
                                               std::to_string(b.width));
  }
  ComparisonVerdict verdict;
  auto field = [&](const char* name, double x, double y, const std::optional<double>& t) {
    if (!t) return;
    FieldVerdict f{name, x, y, *t, std::fabs(x - y) <= *t};
    verdict.pass = verdict.pass && f.pass;
    verdict.fields.push_back(f);
  };
  field("mse", a.mse, b.mse, tol.mse);
  field("mean_signed_error", a.mean_signed_error, b.mean_signed_error, tol.mean_signed_error);
  field("med", a.med, b.med, tol.med);
  field("nmed", a.nmed, b.nmed, tol.nmed);
  field("mred", a.mred, b.mred, tol.mred);
  field("error_rate", a.error_rate, b.error_rate, tol.error_rate);
  field("max_abs_ed", static_cast<double>(a.max_abs_ed), static_cast<double>(b.max_abs_ed),
        tol.max_abs_ed);
  return verdict;
}

}  // namespace hoaa
