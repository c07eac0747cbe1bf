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

#include "hoaa/chains.hpp"

#include <string>

namespace hoaa {

BitWord::BitWord(int width, std::uint64_t bits) : width_(width), bits_(bits) {
  if (width < 1 || width > kMaxWidth) {
    throw Error(ErrorCode::kInvalidInput,
                "BitWord width must be in [1, 64], got " + std::to_string(width));
  }
  if ((bits & ~mask_for(width)) != 0) {
    throw Error(ErrorCode::kInvalidInput, "value " + std::to_string(bits) + " does not fit in " +
                                              std::to_string(width) + " bits");
  }
}

std::string_view to_string(Mode mode) {
  return mode == Mode::kAccurate ? "accurate" : "overestimate";
}

Mode mode_from_string(std::string_view name) {
  if (name == "accurate") return Mode::kAccurate;
  if (name == "overestimate") return Mode::kOverestimate;
  throw Error(ErrorCode::kInvalidInput, "unknown mode '" + std::string(name) + "'");
}

std::string_view to_string(P1AVariant variant) {
  return variant == P1AVariant::kAccurate ? "accurate-p1a" : "approx-p1a";
}

P1AVariant variant_from_string(std::string_view name) {
  if (name == "accurate-p1a") return P1AVariant::kAccurate;
  if (name == "approx-p1a") return P1AVariant::kApprox;
  throw Error(ErrorCode::kInvalidInput, "unknown P1A variant '" + std::string(name) + "'");
}

CellKind cell_kind(P1AVariant variant) {
  return variant == P1AVariant::kAccurate ? CellKind::kAccurateP1A : CellKind::kApproxP1A;
}

void ChainConfig::validate() const {
  if (width < 1 || width > BitWord::kMaxWidth) {
    throw Error(ErrorCode::kConfiguration,
                "chain width must be in [1, 64], got " + std::to_string(width));
  }
  if (approx_positions < 0 || approx_positions > width) {
    throw Error(ErrorCode::kConfiguration,
                "approx positions m=" + std::to_string(approx_positions) + " outside [0, " +
                    std::to_string(width) + "]");
  }
}

std::uint64_t ChainResult::value() const {
  if (sum.width() >= 64) {
    throw Error(ErrorCode::kInvalidInput, "value() needs width < 64; use sum and carry_out");
  }
  return (carry_out ? (std::uint64_t{1} << sum.width()) : 0u) + sum.bits();
}

namespace {

void require_same_width(const BitWord& a, const BitWord& b) {
  if (a.width() != b.width()) {
    throw Error(ErrorCode::kWidthMismatch, "operand widths differ: " + std::to_string(a.width()) +
                                               " vs " + std::to_string(b.width()));
  }
}

void require_chain_width(const ChainConfig& cfg, const BitWord& a, const BitWord& b) {
  require_same_width(a, b);
  if (a.width() != cfg.width) {
    throw Error(ErrorCode::kWidthMismatch, "operand width " + std::to_string(a.width()) +
                                               " does not match chain width " +
                                               std::to_string(cfg.width));
  }
}

// Ripples `carry` through positions [from, width) using the cell table.
// Returns the final carry; sum bits are OR-ed into `sum`.
template <typename CellAt>
Bit ripple(const BitWord& a, const BitWord& b, Bit carry, int from, std::uint64_t& sum,
           CellAt&& cell_at) {
  const std::uint64_t av = a.bits();
  const std::uint64_t bv = b.bits();
  for (int i = from; i < a.width(); ++i) {
    const unsigned row =
        static_cast<unsigned>(((av >> i) & 1u) | (((bv >> i) & 1u) << 1) | (carry ? 4u : 0u));
    const std::uint8_t out = cell_at(i, row);
    sum |= std::uint64_t{out & 1u} << i;
    carry = (out >> 1) & 1u;
  }
  return carry;
}

}  // namespace

ChainResult rca_add(const BitWord& a, const BitWord& b, Bit cin) {
  require_same_width(a, b);
  const auto& fa = cell_truth_table(CellKind::kFA);
  std::uint64_t sum = 0;
  Bit carry = ripple(a, b, cin, 0, sum, [&](int, unsigned row) { return fa[row]; });
  return {BitWord(a.width(), sum), carry};
}

ChainResult hoaa_add(const ChainConfig& cfg, Mode mode, const BitWord& a, const BitWord& b,
                     Bit cin) {
  cfg.validate();
  require_chain_width(cfg, a, b);
  if (mode == Mode::kAccurate || cfg.approx_positions == 0) return rca_add(a, b, cin);

  const auto& fa = cell_truth_table(CellKind::kFA);
  const auto& p1a = cell_truth_table(cell_kind(cfg.variant));
  const int m = cfg.approx_positions;
  std::uint64_t sum = 0;
  Bit carry = ripple(a, b, cin, 0, sum, [&](int i, unsigned row) -> std::uint8_t {
    if (i >= m) return fa[row];
    const std::uint8_t out = p1a[row];
    if (out & 4u) {
      throw UnsupportedConfigurationError(i,
                                          "accurate P1A at position " + std::to_string(i) +
                                              " produced Cout2 = 1; a two-bit carry cannot ripple");
    }
    return out;
  });
  return {BitWord(a.width(), sum), carry};
}

SubtractResult subtract(const ChainConfig& cfg, Mode mode, const BitWord& a, const BitWord& b) {
  cfg.validate();
  if (cfg.approx_positions != 1) {
    throw Error(ErrorCode::kConfiguration,
                "subtraction needs exactly one P1A position (m = 1), got m = " +
                    std::to_string(cfg.approx_positions));
  }
  require_chain_width(cfg, a, b);
  if (mode == Mode::kOverestimate) {
    const ChainResult r = hoaa_add(cfg, Mode::kOverestimate, a, ~b, false);
    return {r.sum, !r.carry_out};
  }
  const ChainResult first = hoaa_add(cfg, Mode::kAccurate, a, ~b, false);
  const ChainResult second = rca_add(first.sum, BitWord(cfg.width, 0), true);
  return {second.sum, !(first.carry_out || second.carry_out)};
}

ChainResult loa_add(int lower_bits, const BitWord& a, const BitWord& b) {
  require_same_width(a, b);
  if (lower_bits < 0 || lower_bits > a.width()) {
    throw Error(ErrorCode::kConfiguration, "LOA lower part m=" + std::to_string(lower_bits) +
                                               " outside [0, " + std::to_string(a.width()) + "]");
  }
  std::uint64_t sum = lower_bits == 0 ? 0 : (a.bits() | b.bits()) & BitWord::mask_for(lower_bits);
  const Bit carry_in = lower_bits > 0 && a.bit(lower_bits - 1) && b.bit(lower_bits - 1);
  const auto& fa = cell_truth_table(CellKind::kFA);
  // With m = N the estimated carry leaves the adder as carry_out.
  Bit carry = ripple(a, b, carry_in, lower_bits, sum, [&](int, unsigned row) { return fa[row]; });
  return {BitWord(a.width(), sum), carry};
}

ModeStrategy explicit_mode(Mode mode) {
  return [mode](const BitWord&, const BitWord&) { return mode; };
}

ModeStrategy msb_and_strategy() {
  return [](const BitWord& a, const BitWord& b) {
    const int msb = a.width() - 1;
    return a.bit(msb) && b.bit(msb) ? Mode::kOverestimate : Mode::kAccurate;
  };
}

Mode select_mode(const BitWord& a, const BitWord& b, const ModeStrategy& strategy) {
  require_same_width(a, b);
  return strategy(a, b);
}

}  // namespace hoaa
