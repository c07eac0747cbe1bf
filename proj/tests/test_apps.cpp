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

#include <cfenv>
#include <cmath>
#include <random>

#include "doctest.h"
#include "hoaa/apps.hpp"
#include "hoaa/cases.hpp"
#include "hoaa/metrics.hpp"

using namespace hoaa;

namespace {

const ChainConfig kChain8{8, 1, P1AVariant::kApprox};

// roundTiesToEven via the floating-point environment: x / 2^k is exact in a
// double and nearbyint uses the default round-to-nearest-even mode.
std::uint64_t ties_to_even_oracle(std::uint64_t x, int k) {
  REQUIRE(std::fegetround() == FE_TONEAREST);
  return static_cast<std::uint64_t>(std::nearbyint(std::ldexp(static_cast<double>(x), -k)));
}

// Hyperbolic CORDIC in double precision over the same shift schedule.
struct DoubleCordic {
  double sinh = 0.0;
  double cosh = 0.0;
};

DoubleCordic double_cordic(double z, const std::vector<int>& schedule) {
  double gain = 1.0;
  for (int i : schedule) gain *= std::sqrt(1.0 - std::ldexp(1.0, -2 * i));
  double x = 1.0 / gain, y = 0.0;
  for (int i : schedule) {
    const double d = z >= 0 ? 1.0 : -1.0;
    const double t = std::ldexp(1.0, -i);
    const double nx = x + d * y * t;
    const double ny = y + d * x * t;
    z -= d * std::atanh(t);
    x = nx;
    y = ny;
  }
  return {y, x};
}

double grid_z(int i, int points) { return -1.0 + 2.0 * i / (points - 1); }

}  // namespace

TEST_CASE("round_to_even examples") {
  CHECK(round_to_even(BitWord(8, 6), 1, kChain8, Mode::kAccurate).bits() == 3);
  CHECK(round_to_even(BitWord(8, 5), 1, kChain8, Mode::kAccurate).bits() == 2);
  CHECK(round_to_even(BitWord(8, 7), 1, kChain8, Mode::kAccurate).bits() == 4);
  // 7 / 2 = 3.5 rounds up; the increment hits the P1A starred row (1,0,0).
  CHECK(round_to_even(BitWord(8, 7), 1, kChain8, Mode::kOverestimate).bits() == 3);
  // 5 / 2 = 2.5 -> 2, no increment.
  CHECK(round_to_even(BitWord(8, 5), 1, kChain8, Mode::kOverestimate).bits() == 2);
  // 9 / 4 = 2.25 -> 2; 11 / 4 = 2.75 -> 3 via (0,0,0) row, exact.
  CHECK(round_to_even(BitWord(8, 11), 2, kChain8, Mode::kOverestimate).bits() == 3);
}

TEST_CASE("round_to_even rejects bad arguments") {
  CHECK_THROWS_AS(round_to_even(BitWord(8, 1), 0, kChain8, Mode::kAccurate), Error);
  CHECK_THROWS_AS(round_to_even(BitWord(8, 1), 8, kChain8, Mode::kAccurate), Error);
  CHECK_THROWS_AS(round_to_even(BitWord(8, 1), 1, ChainConfig{8, 2}, Mode::kAccurate), Error);
  CHECK_THROWS_AS(round_to_even(BitWord(7, 1), 1, kChain8, Mode::kAccurate), Error);
}

TEST_CASE("round_to_even exhaustively against the ties-to-even oracle") {
  int deviations = 0;
  for (int k = 1; k <= 4; ++k) {
    for (std::uint64_t x = 0; x < 256; ++x) {
      const std::uint64_t want = ties_to_even_oracle(x, k);
      REQUIRE(round_to_even(BitWord(8, x), k, kChain8, Mode::kAccurate).bits() == want);
      REQUIRE(round_to_even(BitWord(8, x), k, ChainConfig{8, 1, P1AVariant::kAccurate},
                            Mode::kOverestimate)
                  .bits() == want);
      const std::uint64_t got =
          round_to_even(BitWord(8, x), k, kChain8, Mode::kOverestimate).bits();
      REQUIRE((got == want || got + 1 == want));
      if (got != want) {
        ++deviations;
        // only an odd truncated quotient makes the LSB cell see (1,0,0)
        REQUIRE(((x >> k) & 1u) == 1u);
      }
    }
  }
  CHECK(deviations > 0);
}

TEST_CASE("fixed-point format") {
  const FixedPointFormat q312{16, 12};
  CHECK_NOTHROW(q312.validate());
  CHECK_THROWS_AS((FixedPointFormat{1, 0}.validate()), Error);
  CHECK_THROWS_AS((FixedPointFormat{33, 0}.validate()), Error);
  CHECK_THROWS_AS((FixedPointFormat{8, 8}.validate()), Error);
  CHECK(q312.min_raw() == -32768);
  CHECK(q312.max_raw() == 32767);
  CHECK(q312.to_double(q312.min_raw()) == -8.0);
  CHECK(q312.to_double(q312.max_raw()) == 8.0 - q312.ulp());
  CHECK(q312.from_double(0.5) == 2048);
  CHECK(q312.from_double(-1.0) == -4096);
  CHECK_THROWS_AS(q312.from_double(8.0), Error);
  CHECK(q312.wrap(32768) == -32768);
  CHECK(q312.wrap(-32769) == 32767);
  CHECK(q312.saturate(40000) == 32767);
  CHECK(q312.from_word(q312.to_word(-5)) == -5);
}

TEST_CASE("non-restoring division equals truncated integer division") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20000; ++t) {
    const int bits = 1 + static_cast<int>(rng() % 40);
    const std::uint64_t dividend = rng() & ((std::uint64_t{1} << bits) - 1);
    const std::uint64_t divisor = 1 + (rng() & ((std::uint64_t{1} << (1 + rng() % 30)) - 1));
    REQUIRE(nonrestoring_divide(dividend, divisor, bits) == dividend / divisor);
  }
  CHECK(nonrestoring_divide(0, 7, 8) == 0);
  CHECK(nonrestoring_divide(255, 1, 8) == 255);
  CHECK_THROWS_AS(nonrestoring_divide(5, 0, 8), Error);
}

TEST_CASE("CORDIC configuration") {
  const CordicConfig cfg = CordicConfig::standard();
  CHECK(cfg.iterations == 12);
  CHECK(cfg.repeated_iterations == std::vector<int>{4});
  CHECK(cfg.schedule().size() == 13);
  CHECK(CordicConfig::standard({24, 20}, 16).repeated_iterations == std::vector<int>{4, 13});
  CHECK(cfg.inverse_gain() == doctest::Approx(1.2075).epsilon(1e-3));
  CHECK(cfg.convergence_bound() > 1.1);
  CHECK(cfg.convergence_bound() < 1.1182);
  CHECK(cfg.chain().approx_positions == 1);

  CordicConfig bad = cfg;
  bad.repeated_iterations = {13};
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = cfg;
  bad.iterations = 0;
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("double-precision CORDIC model supports the 2^-8 threshold") {
  // Validates the acceptance threshold independently of the fixed-point path.
  const auto schedule = CordicConfig::standard().schedule();
  double worst_sig = 0.0, worst_tanh = 0.0;
  for (int i = 0; i < 256; ++i) {
    const double z = grid_z(i, 256);
    const DoubleCordic c = double_cordic(z, schedule);
    const double e = c.cosh + c.sinh;
    worst_sig = std::max(worst_sig, std::fabs(e / (e + 1.0) - 1.0 / (1.0 + std::exp(-z))));
    worst_tanh = std::max(worst_tanh, std::fabs(c.sinh / c.cosh - std::tanh(z)));
  }
  CHECK(worst_sig < std::ldexp(1.0, -10));
  CHECK(worst_tanh < std::ldexp(1.0, -10));
}

TEST_CASE("cordic_sinh_cosh examples") {
  const CordicConfig cfg = CordicConfig::standard();
  const auto& f = cfg.format;
  const SinhCosh zero = cordic_sinh_cosh(0, cfg);
  CHECK(std::fabs(f.to_double(zero.sinh)) <= f.ulp());
  CHECK(std::fabs(f.to_double(zero.cosh) - 1.0) <= f.ulp());

  const SinhCosh half = cordic_sinh_cosh(f.from_double(0.5), cfg);
  CHECK(std::fabs(f.to_double(half.sinh) - std::sinh(0.5)) <= std::ldexp(1.0, -8));
  CHECK(std::fabs(f.to_double(half.cosh) - std::cosh(0.5)) <= std::ldexp(1.0, -8));

  const SinhCosh one = cordic_sinh_cosh(f.from_double(1.0), cfg);
  const double s = f.to_double(one.sinh), c = f.to_double(one.cosh);
  CHECK(std::fabs(c * c - s * s - 1.0) <= std::ldexp(1.0, -8));

  try {
    cordic_sinh_cosh(f.from_double(1.2), cfg);
    FAIL("expected a domain error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDomain);
  }
}

TEST_CASE("fixed-point CORDIC tracks the double-precision model") {
  const CordicConfig cfg = CordicConfig::standard();
  const auto& f = cfg.format;
  const int steps = static_cast<int>(cfg.schedule().size());
  for (int i = 0; i < 256; ++i) {
    const std::int64_t z = f.from_double(grid_z(i, 256));
    const SinhCosh fx = cordic_sinh_cosh(z, cfg);
    const DoubleCordic ref = double_cordic(f.to_double(z), cfg.schedule());
    // each step truncates one shift; the gain constant adds half an ulp
    CHECK(std::fabs(f.to_double(fx.sinh) - ref.sinh) <= (steps + 2) * f.ulp());
    CHECK(std::fabs(f.to_double(fx.cosh) - ref.cosh) <= (steps + 2) * f.ulp());
  }
}

TEST_CASE("hyperbolic identity holds on the grid") {
  const CordicConfig cfg = CordicConfig::standard();
  const auto& f = cfg.format;
  const double steps = static_cast<double>(cfg.schedule().size());
  // |d(c^2 - s^2)| <= 2 (|c| + |s|) per-coordinate error, error <= (steps + 2) ulp
  const double eps = 2.0 *
                     (std::cosh(cfg.convergence_bound()) + std::sinh(cfg.convergence_bound())) *
                     (steps + 2) * f.ulp();
  for (int i = 0; i < 256; ++i) {
    const SinhCosh r = cordic_sinh_cosh(f.from_double(grid_z(i, 256)), cfg);
    const double s = f.to_double(r.sinh), c = f.to_double(r.cosh);
    CHECK(std::fabs(c * c - s * s - 1.0) <= eps);
  }
}

TEST_CASE("activation examples") {
  const CordicConfig cfg = CordicConfig::standard();
  const auto& f = cfg.format;
  CHECK(std::fabs(f.to_double(activation(0, AFSelect::kSigmoid, cfg).raw) - 0.5) <= f.ulp());
  CHECK(std::fabs(f.to_double(activation(0, AFSelect::kTanh, cfg).raw)) <= f.ulp());
  const double sig1 = f.to_double(activation(f.from_double(1.0), AFSelect::kSigmoid, cfg).raw);
  CHECK(std::fabs(sig1 - 1.0 / (1.0 + std::exp(-1.0))) <= std::ldexp(1.0, -8));
  CHECK_FALSE(activation(0, AFSelect::kSigmoid, cfg).saturated);
}

TEST_CASE("sigmoid is monotone and tanh is odd on the grid") {
  const CordicConfig cfg = CordicConfig::standard();
  const auto& f = cfg.format;
  std::int64_t previous = f.min_raw();
  for (int i = 0; i < 256; ++i) {
    const std::int64_t z = f.from_double(grid_z(i, 256));
    const std::int64_t s = activation(z, AFSelect::kSigmoid, cfg).raw;
    CHECK(s + 1 >= previous);
    previous = s;
    const std::int64_t pos = activation(z, AFSelect::kTanh, cfg).raw;
    const std::int64_t neg = activation(-z, AFSelect::kTanh, cfg).raw;
    CHECK(std::llabs(pos + neg) <= 2);
  }
}

TEST_CASE("grid evaluation in accurate mode stays within 2^-8") {
  const CordicConfig cfg = CordicConfig::standard();
  for (AFSelect sel : {AFSelect::kSigmoid, AFSelect::kTanh}) {
    const auto grid = evaluate_grid(sel, cfg, 256);
    REQUIRE(grid.size() == 256);
    CHECK(grid.front().z == -1.0);
    CHECK(grid.back().z == 1.0);
    for (const auto& p : grid) {
      CHECK(p.abs_err <= std::ldexp(1.0, -8));
      CHECK_FALSE(p.saturated);
    }
  }
  CHECK_THROWS_AS(evaluate_grid(AFSelect::kTanh, cfg, 16, -1.5, 1.5), Error);
}

TEST_CASE("overestimate activation regression") {
  // Frozen from the current datapath (W=16, F=12, 12 iterations, 256 points).
  struct Expected {
    AFSelect sel;
    double med;
    double error_rate;
    std::int64_t max_abs_ed;
  };
  for (const Expected& e : {Expected{AFSelect::kSigmoid, 0.55078125, 0.5, 3},
                            Expected{AFSelect::kTanh, 1.4921875, 0.8359375, 4}}) {
    CaseOptions o;
    o.kind = CaseKind::kAf;
    o.sel = e.sel;
    o.mode = Mode::kOverestimate;
    const CaseStudy af = make_case(o);
    const ErrorReport r = evaluate(af.domain, af.approx, af.exact, af.exhaustive());
    CAPTURE(to_string(e.sel));
    CHECK(r.n_samples == 256);
    CHECK(r.med == e.med);
    CHECK(r.error_rate == e.error_rate);
    CHECK(r.max_abs_ed == e.max_abs_ed);
  }
}
