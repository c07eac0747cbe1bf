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

#pragma once

// Error characterization of an approximate operator against an exact oracle,
// either by enumerating the whole input space or by seeded Monte Carlo.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hoaa {

enum class Method : std::uint8_t { kExhaustive, kMonteCarlo };

std::string_view to_string(Method method);
Method method_from_string(std::string_view name);

struct ErrorSample {
  std::int64_t exact = 0;
  std::int64_t approx = 0;
  std::int64_t ed = 0;  // approx - exact, wrapped when the plan says so
};

struct ErrorReport {
  std::uint64_t n_samples = 0;
  double mse = 0.0;
  double mean_signed_error = 0.0;
  double med = 0.0;
  double nmed = 0.0;  // med / (2^width - 1)
  double mred = 0.0;  // mean of |ed| / max(|exact|, 1)
  double error_rate = 0.0;
  std::int64_t max_abs_ed = 0;
  Method method = Method::kExhaustive;
  std::optional<std::uint64_t> seed;  // Monte Carlo only
  int width = 0;

  friend bool operator==(const ErrorReport&, const ErrorReport&) = default;
};

// Each operand k ranges over [0, 2^operand_widths[k]).
struct InputDomain {
  std::vector<int> operand_widths;

  int total_bits() const;
  void validate() const;
};

using Kernel = std::function<std::int64_t(std::span<const std::uint64_t>)>;

inline constexpr int kMaxExhaustiveBits = 26;

struct TrialPlan {
  Method method = Method::kExhaustive;
  std::uint64_t trials = 0;  // Monte Carlo only
  std::uint64_t seed = 42;
  int width = 8;    // normalization width for NMED
  int workers = 0;  // 0 = OpenMP default; never affects results
  // When > 0, error distances are taken modulo 2^wrap_bits as the balanced
  // residue, for operators whose results are only defined modulo 2^N.
  int wrap_bits = 0;

  static TrialPlan exhaustive(int width);
  // Default trial count is 2^(width + 1).
  static TrialPlan monte_carlo(int width, std::uint64_t seed,
                               std::optional<std::uint64_t> trials = std::nullopt);

  void validate() const;
};

// OpenMP kernel. Exhaustive enumeration visits index i = 0..2^B-1 and slices
// operand k out of i starting at the least significant bits (operand 0
// lowest). Monte Carlo trial t draws operand k from SplitMix64 output
// t * arity + k. Partial sums are formed over fixed-size blocks and reduced
// in block order, so the report is bit-identical for any worker count.
// Kernels must be safe to call concurrently.
ErrorReport evaluate(const InputDomain& domain, const Kernel& approx, const Kernel& exact,
                     const TrialPlan& plan);

// Single-threaded reference with a plain running sum; integer-derived fields
// match evaluate() exactly, mred to rounding.
ErrorReport evaluate_serial(const InputDomain& domain, const Kernel& approx, const Kernel& exact,
                            const TrialPlan& plan);

// The samples evaluate() would aggregate, in the same order.
std::vector<ErrorSample> collect_samples(const InputDomain& domain, const Kernel& approx,
                                         const Kernel& exact, const TrialPlan& plan);

ErrorReport summarize(std::span<const ErrorSample> samples, int width, Method method,
                      std::optional<std::uint64_t> seed, int wrap_bits = 0);

// sqrt((mse - med^2) / n), the standard error of the mean |ed|.
double med_standard_error(const ErrorReport& report);

struct Tolerances {
  std::optional<double> mse;
  std::optional<double> mean_signed_error;
  std::optional<double> med;
  std::optional<double> nmed;
  std::optional<double> mred;
  std::optional<double> error_rate;
  std::optional<double> max_abs_ed;

  static Tolerances uniform(double tol);
};

struct FieldVerdict {
  std::string field;
  double a = 0.0;
  double b = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct ComparisonVerdict {
  std::vector<FieldVerdict> fields;
  bool pass = true;
};

// Fields without a tolerance are not compared. Throws kWidthMismatch when
// the reports have different widths.
ComparisonVerdict compare_reports(const ErrorReport& a, const ErrorReport& b,
                                  const Tolerances& tolerances);

}  // namespace hoaa
