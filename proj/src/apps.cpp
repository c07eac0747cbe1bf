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

#include "hoaa/apps.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>

namespace hoaa {

BitWord round_to_even(const BitWord& x, int shift, const ChainConfig& cfg, Mode mode) {
  cfg.validate();
  if (cfg.approx_positions != 1) {
    throw Error(ErrorCode::kConfiguration, "rounding needs a single P1A position (m = 1)");
  }
  if (x.width() != cfg.width) {
    throw Error(ErrorCode::kWidthMismatch, "operand width does not match chain width");
  }
  if (shift < 1 || shift >= x.width()) {
    throw Error(ErrorCode::kInvalidInput, "shift " + std::to_string(shift) + " outside [1, " +
                                              std::to_string(x.width()) + ")");
  }
  const std::uint64_t bits = x.bits();
  const BitWord q(x.width(), bits >> shift);
  const bool guard = (bits >> (shift - 1)) & 1u;
  const bool sticky = shift > 1 && (bits & BitWord::mask_for(shift - 1)) != 0;
  const bool round_up = guard && (sticky || q.bit(0));
  if (!round_up) return q;

  const BitWord zero(x.width(), 0);
  if (mode == Mode::kOverestimate) return hoaa_add(cfg, Mode::kOverestimate, q, zero, false).sum;
  return rca_add(q, zero, true).sum;
}

namespace {

constexpr int kStandardRepeats[] = {4, 13, 40};

std::int64_t add(const CordicConfig& cfg, const ChainConfig& chain, std::int64_t a,
                 std::int64_t b) {
  const auto& f = cfg.format;
  return f.from_word(hoaa_add(chain, Mode::kAccurate, f.to_word(a), f.to_word(b), false).sum);
}

std::int64_t sub(const CordicConfig& cfg, const ChainConfig& chain, std::int64_t a,
                 std::int64_t b) {
  const auto& f = cfg.format;
  return f.from_word(subtract(chain, cfg.adder_mode, f.to_word(a), f.to_word(b)).result);
}

}  // namespace

CordicConfig CordicConfig::standard(FixedPointFormat format, int iterations, Mode adder_mode,
                                    P1AVariant variant) {
  CordicConfig cfg;
  cfg.format = format;
  cfg.iterations = iterations;
  cfg.repeated_iterations.clear();
  for (int r : kStandardRepeats) {
    if (r <= iterations) cfg.repeated_iterations.push_back(r);
  }
  cfg.adder_mode = adder_mode;
  cfg.variant = variant;
  format.validate();
  cfg.gain_correction = format.from_double(cfg.inverse_gain());
  return cfg;
}

void CordicConfig::validate() const {
  format.validate();
  if (iterations < 1) throw Error(ErrorCode::kConfiguration, "CORDIC needs >= 1 iteration");
  for (int r : repeated_iterations) {
    if (r < 1 || r > iterations) {
      throw Error(ErrorCode::kConfiguration,
                  "repeated iteration " + std::to_string(r) + " outside [1, iterations]");
    }
  }
  if (gain_correction <= 0 || gain_correction > format.max_raw()) {
    throw Error(ErrorCode::kConfiguration, "gain correction must be a positive raw value");
  }
}

std::vector<int> CordicConfig::schedule() const {
  std::vector<int> order;
  for (int i = 1; i <= iterations; ++i) {
    order.push_back(i);
    if (std::find(repeated_iterations.begin(), repeated_iterations.end(), i) !=
        repeated_iterations.end()) {
      order.push_back(i);
    }
  }
  return order;
}

double CordicConfig::inverse_gain() const {
  double gain = 1.0;
  for (int i : schedule()) gain *= std::sqrt(1.0 - std::ldexp(1.0, -2 * i));
  return 1.0 / gain;
}

double CordicConfig::convergence_bound() const {
  double bound = 0.0;
  for (int i : schedule()) bound += std::atanh(std::ldexp(1.0, -i));
  return bound;
}

ChainConfig CordicConfig::chain() const {
  return ChainConfig{format.total_bits, 1, variant, false};
}

SinhCosh cordic_sinh_cosh(std::int64_t z_raw, const CordicConfig& cfg) {
  cfg.validate();
  const auto& f = cfg.format;
  if (std::fabs(f.to_double(z_raw)) > cfg.convergence_bound()) {
    throw Error(ErrorCode::kDomain, "|z| = " + std::to_string(std::fabs(f.to_double(z_raw))) +
                                        " exceeds the hyperbolic convergence bound " +
                                        std::to_string(cfg.convergence_bound()));
  }
  const ChainConfig chain = cfg.chain();
  // Rotate by |z| and restore the sign of sinh afterwards; both negations
  // are subtractions from zero on the chain.
  const bool negative = f.wrap(z_raw) < 0;
  std::int64_t x = cfg.gain_correction;
  std::int64_t y = 0;
  std::int64_t z = negative ? sub(cfg, chain, 0, z_raw) : f.wrap(z_raw);
  for (int i : cfg.schedule()) {
    const std::int64_t angle = f.from_double(std::atanh(std::ldexp(1.0, -i)));
    const std::int64_t xs = x >> i;
    const std::int64_t ys = y >> i;
    if (z >= 0) {
      x = add(cfg, chain, x, ys);
      y = add(cfg, chain, y, xs);
      z = sub(cfg, chain, z, angle);
    } else {
      x = sub(cfg, chain, x, ys);
      y = sub(cfg, chain, y, xs);
      z = add(cfg, chain, z, angle);
    }
  }
  return {negative ? sub(cfg, chain, 0, y) : y, x};
}

std::string_view to_string(AFSelect sel) { return sel == AFSelect::kSigmoid ? "sigmoid" : "tanh"; }

AFSelect af_select_from_string(std::string_view name) {
  if (name == "sigmoid") return AFSelect::kSigmoid;
  if (name == "tanh") return AFSelect::kTanh;
  throw Error(ErrorCode::kInvalidInput, "unknown activation '" + std::string(name) + "'");
}

std::uint64_t nonrestoring_divide(std::uint64_t dividend, std::uint64_t divisor,
                                  int dividend_bits) {
  if (divisor == 0) throw Error(ErrorCode::kDomain, "division by zero");
  if (dividend_bits < 1 || dividend_bits > 62 || divisor >= (std::uint64_t{1} << 62)) {
    throw Error(ErrorCode::kInvalidInput, "operands too wide for non-restoring division");
  }
  const auto d = static_cast<std::int64_t>(divisor);
  std::int64_t rem = 0;
  std::uint64_t quotient = 0;
  for (int i = dividend_bits - 1; i >= 0; --i) {
    const std::int64_t next_bit = static_cast<std::int64_t>((dividend >> i) & 1u);
    rem = rem >= 0 ? 2 * rem + next_bit - d : 2 * rem + next_bit + d;
    quotient = (quotient << 1) | (rem >= 0 ? 1u : 0u);
  }
  return quotient;
}

ActivationResult activation(std::int64_t z_raw, AFSelect sel, const CordicConfig& cfg) {
  const auto [sinh, cosh] = cordic_sinh_cosh(z_raw, cfg);
  const auto& f = cfg.format;
  const ChainConfig chain = cfg.chain();

  std::int64_t num = 0;
  std::int64_t den = 0;
  if (sel == AFSelect::kSigmoid) {
    num = add(cfg, chain, cosh, sinh);
    den = add(cfg, chain, num, f.one_raw());
  } else {
    num = sinh;
    den = cosh;
  }
  if (den == 0) {
    return {num >= 0 ? f.max_raw() : f.min_raw(), true};
  }
  const bool negative = (num < 0) != (den < 0);
  const auto mag_num = static_cast<std::uint64_t>(num < 0 ? -num : num) << f.frac_bits;
  const auto mag_den = static_cast<std::uint64_t>(den < 0 ? -den : den);
  const auto q = static_cast<std::int64_t>(
      nonrestoring_divide(mag_num, mag_den, f.total_bits + f.frac_bits + 1));
  const std::int64_t signed_q = negative ? -q : q;
  const std::int64_t clamped = f.saturate(signed_q);
  return {clamped, clamped != signed_q};
}

std::vector<GridPoint> evaluate_grid(AFSelect sel, const CordicConfig& cfg, int points, double lo,
                                     double hi) {
  if (points < 1) throw Error(ErrorCode::kInvalidInput, "grid needs at least one point");
  cfg.validate();
  std::vector<GridPoint> grid(static_cast<std::size_t>(points));
  std::vector<std::exception_ptr> failures(static_cast<std::size_t>(points));
  const auto& f = cfg.format;
#pragma omp parallel for schedule(static)
  for (int i = 0; i < points; ++i) {
    try {
      const double t = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
      const std::int64_t z_raw = f.from_double(lo + (hi - lo) * t);
      const double z = f.to_double(z_raw);
      const ActivationResult r = activation(z_raw, sel, cfg);
      GridPoint& p = grid[static_cast<std::size_t>(i)];
      p.z = z;
      p.sel = sel;
      p.mode = cfg.adder_mode;
      p.value = f.to_double(r.raw);
      p.oracle = sel == AFSelect::kSigmoid ? 1.0 / (1.0 + std::exp(-z)) : std::tanh(z);
      p.abs_err = std::fabs(p.value - p.oracle);
      p.saturated = r.saturated;
    } catch (...) {
      failures[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : failures) {
    if (e) std::rethrow_exception(e);
  }
  return grid;
}

}  // namespace hoaa
