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

#include "hoaa/fixed_point.hpp"

#include <cmath>
#include <string>

namespace hoaa {

void FixedPointFormat::validate() const {
  if (total_bits < 2 || total_bits > 32) {
    throw Error(ErrorCode::kConfiguration,
                "fixed-point width must be in [2, 32], got " + std::to_string(total_bits));
  }
  if (frac_bits < 0 || frac_bits >= total_bits) {
    throw Error(ErrorCode::kConfiguration,
                "fractional bits must be in [0, W), got " + std::to_string(frac_bits));
  }
}

double FixedPointFormat::ulp() const { return std::ldexp(1.0, -frac_bits); }

std::int64_t FixedPointFormat::from_double(double value) const {
  const double scaled = std::nearbyint(std::ldexp(value, frac_bits));
  if (!std::isfinite(scaled) || scaled < static_cast<double>(min_raw()) ||
      scaled > static_cast<double>(max_raw())) {
    throw Error(ErrorCode::kDomain, std::to_string(value) + " is outside Q" +
                                        std::to_string(total_bits - frac_bits) + "." +
                                        std::to_string(frac_bits));
  }
  return static_cast<std::int64_t>(scaled);
}

double FixedPointFormat::to_double(std::int64_t raw) const {
  return std::ldexp(static_cast<double>(raw), -frac_bits);
}

std::int64_t FixedPointFormat::wrap(std::int64_t raw) const {
  const int shift = 64 - total_bits;
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(raw) << shift) >> shift;
}

std::int64_t FixedPointFormat::saturate(std::int64_t raw) const {
  return raw < min_raw() ? min_raw() : (raw > max_raw() ? max_raw() : raw);
}

BitWord FixedPointFormat::to_word(std::int64_t raw) const {
  return BitWord(total_bits, static_cast<std::uint64_t>(raw) & BitWord::mask_for(total_bits));
}

std::int64_t FixedPointFormat::from_word(const BitWord& word) const {
  return wrap(static_cast<std::int64_t>(word.bits()));
}

}  // namespace hoaa
