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

// Case studies running on the HOAA: round-half-to-even requantization and a
// CORDIC sigmoid/tanh unit. Two's-complement subtraction lives in chains.hpp.

#include <cstdint>
#include <string_view>
#include <vector>

#include "hoaa/chains.hpp"
#include "hoaa/fixed_point.hpp"

namespace hoaa {

// x / 2^shift rounded to nearest, ties to even. The guard/sticky decision is
// exact; only the conditional +1 goes through the chain (one P1A pass under
// kOverestimate, a second exact pass under kAccurate). Needs
// cfg.approx_positions == 1 and 1 <= shift < x.width().
BitWord round_to_even(const BitWord& x, int shift, const ChainConfig& cfg, Mode mode);

struct CordicConfig {
  FixedPointFormat format;
  int iterations = 12;
  std::vector<int> repeated_iterations = {4};
  std::int64_t gain_correction = 0;  // raw 1/K_h in `format`
  Mode adder_mode = Mode::kAccurate;
  P1AVariant variant = P1AVariant::kApprox;

  // Repeats the indices 4, 13, 40 that fall inside [1, iterations] and sets
  // gain_correction from the resulting schedule.
  static CordicConfig standard(FixedPointFormat format = {}, int iterations = 12,
                               Mode adder_mode = Mode::kAccurate,
                               P1AVariant variant = P1AVariant::kApprox);

  void validate() const;

  // Shift indices in execution order, repeats included.
  std::vector<int> schedule() const;
  // 1 / prod sqrt(1 - 2^-2i) over schedule().
  double inverse_gain() const;
  // Sum of atanh(2^-i) over schedule(); the largest |z| that converges.
  double convergence_bound() const;
  // Width W, one P1A position at the LSB.
  ChainConfig chain() const;
};

struct SinhCosh {
  std::int64_t sinh = 0;
  std::int64_t cosh = 0;
};

// Hyperbolic rotation mode on |z|, with sinh negated afterwards for z < 0 so
// that sinh is odd and cosh even. Additions use the chain in accurate mode;
// every subtraction uses subtract() under cfg.adder_mode, which is where the
// P1A supplies the two's-complement +1. Throws kDomain when |z| exceeds
// convergence_bound().
SinhCosh cordic_sinh_cosh(std::int64_t z_raw, const CordicConfig& cfg);

enum class AFSelect : std::uint8_t { kSigmoid, kTanh };

std::string_view to_string(AFSelect sel);
AFSelect af_select_from_string(std::string_view name);

struct ActivationResult {
  std::int64_t raw = 0;
  bool saturated = false;
};

// sigmoid = e / (e + 1) with e = cosh + sinh; tanh = sinh / cosh. Both stage
// adders run on the chain; the quotient comes from nonrestoring_divide().
ActivationResult activation(std::int64_t z_raw, AFSelect sel, const CordicConfig& cfg);

// Truncated quotient of dividend / divisor by binary non-restoring division
// over `dividend_bits` iterations. Throws kDomain for a zero divisor.
std::uint64_t nonrestoring_divide(std::uint64_t dividend, std::uint64_t divisor, int dividend_bits);

struct GridPoint {
  double z = 0.0;
  AFSelect sel = AFSelect::kSigmoid;
  Mode mode = Mode::kAccurate;
  double value = 0.0;
  double oracle = 0.0;
  double abs_err = 0.0;
  bool saturated = false;
};

// `points` evenly spaced arguments over [lo, hi], each quantized to the
// format before evaluation; the oracle sees the quantized argument.
std::vector<GridPoint> evaluate_grid(AFSelect sel, const CordicConfig& cfg, int points,
                                     double lo = -1.0, double hi = 1.0);

}  // namespace hoaa
