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

// Word-level adders built by rippling carries through the cells: the exact
// ripple-carry adder, the reconfigurable HOAA(N, m), a lower-part OR adder
// baseline and the single-pass two's-complement subtractor.

#include <cstdint>
#include <functional>
#include <string_view>

#include "hoaa/cells.hpp"

namespace hoaa {

// Fixed-width unsigned bit vector, LSB at position 0.
class BitWord {
 public:
  static constexpr int kMaxWidth = 64;

  BitWord(int width, std::uint64_t bits);

  int width() const { return width_; }
  std::uint64_t bits() const { return bits_; }
  Bit bit(int position) const { return (bits_ >> position) & 1u; }
  std::uint64_t mask() const { return mask_for(width_); }
  BitWord operator~() const { return BitWord(width_, ~bits_ & mask()); }

  static std::uint64_t mask_for(int width) {
    return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1u;
  }

  friend bool operator==(const BitWord&, const BitWord&) = default;

 private:
  int width_;
  std::uint64_t bits_;
};

enum class Mode : std::uint8_t { kAccurate, kOverestimate };

enum class P1AVariant : std::uint8_t { kAccurate, kApprox };

std::string_view to_string(Mode mode);
Mode mode_from_string(std::string_view name);
std::string_view to_string(P1AVariant variant);
P1AVariant variant_from_string(std::string_view name);
CellKind cell_kind(P1AVariant variant);

struct ChainConfig {
  int width = 8;
  // Positions 0..approx_positions-1 are reconfigurable; the rest are FAs.
  int approx_positions = 1;
  P1AVariant variant = P1AVariant::kApprox;
  // Power gating of idle P1A cells is recorded only; it does not change the
  // computed value.
  bool power_gate_idle = false;

  void validate() const;
};

struct ChainResult {
  BitWord sum;
  Bit carry_out;

  // carry_out * 2^N + sum. Throws kInvalidInput for N = 64.
  std::uint64_t value() const;
};

ChainResult rca_add(const BitWord& a, const BitWord& b, Bit cin);

// Under kOverestimate the configured P1A variant replaces the FA at every
// reconfigurable position. An accurate P1A raising Cout2 throws
// UnsupportedConfigurationError naming the position.
ChainResult hoaa_add(const ChainConfig& cfg, Mode mode, const BitWord& a, const BitWord& b,
                     Bit cin);

struct SubtractResult {
  BitWord result;
  // NOT carry-out of the final addition pass: 1 iff a < b.
  Bit borrow;
};

// a + ~b + 1. kOverestimate takes the +1 from the LSB P1A in one pass;
// kAccurate adds it in a second exact pass. Needs cfg.approx_positions == 1.
SubtractResult subtract(const ChainConfig& cfg, Mode mode, const BitWord& a, const BitWord& b);

// Lower `lower_bits` positions are a|b; the exact upper part takes
// a[m-1] & b[m-1] as its carry-in.
ChainResult loa_add(int lower_bits, const BitWord& a, const BitWord& b);

using ModeStrategy = std::function<Mode(const BitWord&, const BitWord&)>;

ModeStrategy explicit_mode(Mode mode);
// kOverestimate iff both operand MSBs are set.
ModeStrategy msb_and_strategy();

Mode select_mode(const BitWord& a, const BitWord& b, const ModeStrategy& strategy);

}  // namespace hoaa
