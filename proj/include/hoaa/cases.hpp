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

// Ready-made (domain, approximate kernel, exact oracle) triples for the
// metrics engine, one per case study.

#include <string>
#include <string_view>

#include "hoaa/apps.hpp"
#include "hoaa/chains.hpp"
#include "hoaa/metrics.hpp"

namespace hoaa {

enum class CaseKind : std::uint8_t { kCell, kAdd, kSubtract, kRound, kLoa, kAf };

std::string_view to_string(CaseKind kind);
CaseKind case_kind_from_string(std::string_view name);

struct CaseOptions {
  CaseKind kind = CaseKind::kSubtract;
  ChainConfig chain;
  Mode mode = Mode::kOverestimate;
  bool random_cin = false;               // add: draw cin as a third operand
  int shift = 1;                         // round
  CellKind cell = CellKind::kApproxP1A;  // cell
  AFSelect sel = AFSelect::kSigmoid;     // af
  FixedPointFormat format;               // af
  int cordic_iterations = 12;            // af
  int grid_bits = 8;                     // af: 2^grid_bits points over [-1, 1]
};

struct CaseStudy {
  InputDomain domain;
  Kernel approx;
  Kernel exact;
  int width = 0;      // NMED normalization width
  int wrap_bits = 0;  // see TrialPlan::wrap_bits

  TrialPlan exhaustive() const;
  TrialPlan monte_carlo(std::uint64_t seed, std::optional<std::uint64_t> trials = {}) const;
};

// cell:     (a, b, cin) one bit each, exact a+b+cin (+1 for P1A kinds), width 2
// add:      (a, b[, cin]), exact a+b+cin+(2^m-1) under kOverestimate
// subtract: (a, b), exact (a-b) mod 2^N, errors wrapped modulo 2^N
// round:    (x), exact is the two-pass accurate rounding
// loa:      (a, b), exact a+b, chain.approx_positions is the OR-ed part
// af:       (grid index), exact is the accurate-mode activation raw value
CaseStudy make_case(const CaseOptions& options);

}  // namespace hoaa
