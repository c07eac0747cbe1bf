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

#include <cstdint>

#include "hoaa/chains.hpp"

namespace hoaa {

// Signed two's-complement Q format with `total_bits` bits of which
// `frac_bits` are fractional. Raw values are carried sign-extended in an
// int64_t.
struct FixedPointFormat {
  int total_bits = 16;
  int frac_bits = 12;

  void validate() const;

  std::int64_t min_raw() const { return -(std::int64_t{1} << (total_bits - 1)); }
  std::int64_t max_raw() const { return (std::int64_t{1} << (total_bits - 1)) - 1; }
  std::int64_t one_raw() const { return std::int64_t{1} << frac_bits; }
  double ulp() const;

  // Round to nearest; throws kDomain outside the representable range.
  std::int64_t from_double(double value) const;
  double to_double(std::int64_t raw) const;

  // Reduces modulo 2^total_bits and sign-extends.
  std::int64_t wrap(std::int64_t raw) const;
  std::int64_t saturate(std::int64_t raw) const;

  BitWord to_word(std::int64_t raw) const;
  std::int64_t from_word(const BitWord& word) const;
};

}  // namespace hoaa
