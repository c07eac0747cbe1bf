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

// Shared by the OpenMP kernel and the serial reference.

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "hoaa/metrics.hpp"
#include "hoaa/rng.hpp"

namespace hoaa::detail {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

// Bit offset and mask of every operand inside an exhaustive index.
struct OperandLayout {
  std::vector<int> offsets;
  std::vector<std::uint64_t> masks;

  explicit OperandLayout(const InputDomain& domain) {
    int offset = 0;
    for (int w : domain.operand_widths) {
      offsets.push_back(offset);
      masks.push_back(w >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << w) - 1u);
      offset += w;
    }
  }

  std::size_t arity() const { return offsets.size(); }

  void fill(const TrialPlan& plan, std::uint64_t index, std::span<std::uint64_t> out) const {
    if (plan.method == Method::kExhaustive) {
      for (std::size_t k = 0; k < arity(); ++k) out[k] = (index >> offsets[k]) & masks[k];
    } else {
      for (std::size_t k = 0; k < arity(); ++k) {
        out[k] = SplitMix64::at(plan.seed, index * arity() + k) & masks[k];
      }
    }
  }
};

inline std::uint64_t sample_count(const InputDomain& domain, const TrialPlan& plan) {
  if (plan.method == Method::kExhaustive) return std::uint64_t{1} << domain.total_bits();
  return plan.trials;
}

// Balanced residue of `ed` modulo 2^bits, in [-2^(bits-1), 2^(bits-1)).
inline i128 wrap_ed(i128 ed, int bits) {
  if (bits <= 0) return ed;
  const i128 modulus = i128{1} << bits;
  const i128 half = modulus >> 1;
  i128 r = ed % modulus;
  if (r < 0) r += modulus;
  return r >= half ? r - modulus : r;
}

// Exact integer accumulation; only the relative-error sum is floating point.
struct Accumulator {
  std::uint64_t n = 0;
  i128 sum_ed = 0;
  u128 sum_abs = 0;
  u128 sum_sq = 0;
  std::uint64_t errors = 0;
  std::int64_t max_abs = 0;
  double rel_sum = 0.0;

  int wrap_bits = 0;

  void add(std::int64_t exact, std::int64_t approx) {
    const i128 ed = wrap_ed(i128{approx} - i128{exact}, wrap_bits);
    const u128 mag = static_cast<u128>(ed < 0 ? -ed : ed);
    ++n;
    sum_ed += ed;
    sum_abs += mag;
    sum_sq += mag * mag;
    if (mag != 0) {
      ++errors;
      if (static_cast<std::int64_t>(mag) > max_abs) max_abs = static_cast<std::int64_t>(mag);
      const double denom = exact == 0 ? 1.0 : std::fabs(static_cast<double>(exact));
      rel_sum += static_cast<double>(mag) / denom;
    }
  }

  void merge(const Accumulator& o) {
    n += o.n;
    sum_ed += o.sum_ed;
    sum_abs += o.sum_abs;
    sum_sq += o.sum_sq;
    errors += o.errors;
    if (o.max_abs > max_abs) max_abs = o.max_abs;
    rel_sum += o.rel_sum;
  }

  ErrorReport finish(int width, Method method, std::optional<std::uint64_t> seed) const {
    ErrorReport r;
    r.n_samples = n;
    r.method = method;
    r.seed = seed;
    r.width = width;
    if (n == 0) return r;
    const long double count = static_cast<long double>(n);
    r.mse = static_cast<double>(static_cast<long double>(sum_sq) / count);
    r.mean_signed_error = static_cast<double>(static_cast<long double>(sum_ed) / count);
    r.med = static_cast<double>(static_cast<long double>(sum_abs) / count);
    const long double full_scale = width >= 64
                                       ? 18446744073709551615.0L
                                       : static_cast<long double>((std::uint64_t{1} << width) - 1u);
    r.nmed = static_cast<double>(static_cast<long double>(sum_abs) / count / full_scale);
    r.mred = static_cast<double>(static_cast<long double>(rel_sum) / count);
    r.error_rate = static_cast<double>(static_cast<long double>(errors) / count);
    r.max_abs_ed = max_abs;
    return r;
  }
};

inline std::optional<std::uint64_t> report_seed(const TrialPlan& plan) {
  if (plan.method == Method::kMonteCarlo) return plan.seed;
  return std::nullopt;
}

}  // namespace hoaa::detail
