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

#include "hoaa/cases.hpp"

#include <cmath>
#include <string>

namespace hoaa {

std::string_view to_string(CaseKind kind) {
  switch (kind) {
    case CaseKind::kCell:
      return "cell";
    case CaseKind::kAdd:
      return "add";
    case CaseKind::kSubtract:
      return "subtract";
    case CaseKind::kRound:
      return "round";
    case CaseKind::kLoa:
      return "loa";
    case CaseKind::kAf:
      return "af";
  }
  return "?";
}

CaseKind case_kind_from_string(std::string_view name) {
  for (auto k : {CaseKind::kCell, CaseKind::kAdd, CaseKind::kSubtract, CaseKind::kRound,
                 CaseKind::kLoa, CaseKind::kAf}) {
    if (to_string(k) == name) return k;
  }
  throw Error(ErrorCode::kInvalidInput, "unknown case '" + std::string(name) + "'");
}

namespace {

using Ops = std::span<const std::uint64_t>;

std::int64_t as_int(std::uint64_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

TrialPlan CaseStudy::exhaustive() const {
  TrialPlan plan = TrialPlan::exhaustive(width);
  plan.wrap_bits = wrap_bits;
  return plan;
}

TrialPlan CaseStudy::monte_carlo(std::uint64_t seed, std::optional<std::uint64_t> trials) const {
  TrialPlan plan = TrialPlan::monte_carlo(width, seed, trials);
  plan.wrap_bits = wrap_bits;
  return plan;
}

CaseStudy make_case(const CaseOptions& o) {
  const ChainConfig cfg = o.chain;
  const int n = cfg.width;
  const Mode mode = o.mode;
  switch (o.kind) {
    case CaseKind::kCell: {
      const CellKind cell = o.cell;
      if (cell == CellKind::kHA) {
        throw Error(ErrorCode::kConfiguration, "the cell case needs a three-input cell");
      }
      const bool plus_one = cell == CellKind::kAccurateP1A || cell == CellKind::kApproxP1A;
      return {{{1, 1, 1}},
              [cell](Ops v) { return std::int64_t{eval_cell(cell, v[0], v[1], v[2]).value()}; },
              [plus_one](Ops v) { return as_int(v[0] + v[1] + v[2] + (plus_one ? 1 : 0)); },
              2};
    }
    case CaseKind::kAdd: {
      cfg.validate();
      if (n > 62) throw Error(ErrorCode::kConfiguration, "add case needs width <= 62");
      const std::uint64_t bias =
          mode == Mode::kOverestimate ? (std::uint64_t{1} << cfg.approx_positions) - 1u : 0u;
      InputDomain domain{{n, n}};
      if (o.random_cin) domain.operand_widths.push_back(1);
      const bool has_cin = o.random_cin;
      return {
          domain,
          [cfg, mode, n, has_cin](Ops v) {
            return as_int(
                hoaa_add(cfg, mode, BitWord(n, v[0]), BitWord(n, v[1]), has_cin && v[2]).value());
          },
          [bias, has_cin](Ops v) { return as_int(v[0] + v[1] + (has_cin ? v[2] : 0) + bias); }, n};
    }
    case CaseKind::kSubtract: {
      ChainConfig sub_cfg = cfg;
      sub_cfg.validate();
      if (sub_cfg.approx_positions != 1) {
        throw Error(ErrorCode::kConfiguration, "subtraction needs m = 1");
      }
      const std::uint64_t mask = BitWord::mask_for(n);
      return {{{n, n}},
              [sub_cfg, mode, n](Ops v) {
                return as_int(
                    subtract(sub_cfg, mode, BitWord(n, v[0]), BitWord(n, v[1])).result.bits());
              },
              [mask](Ops v) { return as_int((v[0] - v[1]) & mask); },
              n,
              n};
    }
    case CaseKind::kRound: {
      cfg.validate();
      if (o.shift < 1 || o.shift >= n) {
        throw Error(ErrorCode::kConfiguration, "shift must be in [1, width)");
      }
      const int k = o.shift;
      return {{{n}},
              [cfg, mode, n, k](Ops v) {
                return as_int(round_to_even(BitWord(n, v[0]), k, cfg, mode).bits());
              },
              [cfg, n, k](Ops v) {
                return as_int(round_to_even(BitWord(n, v[0]), k, cfg, Mode::kAccurate).bits());
              },
              n};
    }
    case CaseKind::kLoa: {
      cfg.validate();
      const int m = cfg.approx_positions;
      return {
          {{n, n}},
          [m, n](Ops v) { return as_int(loa_add(m, BitWord(n, v[0]), BitWord(n, v[1])).value()); },
          [](Ops v) { return as_int(v[0] + v[1]); },
          n};
    }
    case CaseKind::kAf: {
      if (o.grid_bits < 1 || o.grid_bits > 16) {
        throw Error(ErrorCode::kConfiguration, "grid bits must be in [1, 16]");
      }
      CordicConfig approx_cfg =
          CordicConfig::standard(o.format, o.cordic_iterations, mode, cfg.variant);
      CordicConfig exact_cfg =
          CordicConfig::standard(o.format, o.cordic_iterations, Mode::kAccurate, cfg.variant);
      const double last = static_cast<double>((1 << o.grid_bits) - 1);
      const FixedPointFormat fmt = o.format;
      auto z_of = [fmt, last](std::uint64_t i) {
        return fmt.from_double(-1.0 + 2.0 * static_cast<double>(i) / last);
      };
      const AFSelect sel = o.sel;
      return {
          {{o.grid_bits}},
          [approx_cfg, sel, z_of](Ops v) { return activation(z_of(v[0]), sel, approx_cfg).raw; },
          [exact_cfg, sel, z_of](Ops v) { return activation(z_of(v[0]), sel, exact_cfg).raw; },
          fmt.total_bits};
    }
  }
  throw Error(ErrorCode::kConfiguration, "unknown case");
}

}  // namespace hoaa
