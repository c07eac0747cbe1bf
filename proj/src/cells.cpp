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

#include "hoaa/cells.hpp"

#include <algorithm>
#include <unordered_map>

namespace hoaa {

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::kNot:
      return "NOT";
    case GateKind::kAnd2:
      return "AND2";
    case GateKind::kOr2:
      return "OR2";
    case GateKind::kXor2:
      return "XOR2";
    case GateKind::kXnor2:
      return "XNOR2";
    case GateKind::kAnd3:
      return "AND3";
  }
  return "?";
}

GateKind gate_kind_from_string(std::string_view name) {
  for (auto k : {GateKind::kNot, GateKind::kAnd2, GateKind::kOr2, GateKind::kXor2, GateKind::kXnor2,
                 GateKind::kAnd3}) {
    if (to_string(k) == name) return k;
  }
  throw Error(ErrorCode::kInvalidInput, "unknown gate kind '" + std::string(name) + "'");
}

int gate_arity(GateKind kind) {
  switch (kind) {
    case GateKind::kNot:
      return 1;
    case GateKind::kAnd3:
      return 3;
    default:
      return 2;
  }
}

CellNetlist::CellNetlist(std::string name, std::vector<std::string> inputs, std::vector<Gate> gates,
                         std::vector<std::string> outputs)
    : name_(std::move(name)),
      inputs_(std::move(inputs)),
      gates_(std::move(gates)),
      outputs_(std::move(outputs)) {
  if (inputs_.size() > 16) {
    throw Error(ErrorCode::kConfiguration, name_ + ": too many primary inputs");
  }
  auto define = [&](const std::string& net) {
    if (std::find(nets_.begin(), nets_.end(), net) != nets_.end()) {
      throw Error(ErrorCode::kConfiguration, name_ + ": net '" + net + "' driven twice");
    }
    nets_.push_back(net);
    return static_cast<int>(nets_.size()) - 1;
  };
  for (const auto& in : inputs_) define(in);

  for (const auto& g : gates_) {
    if (static_cast<int>(g.inputs.size()) != gate_arity(g.kind)) {
      throw Error(ErrorCode::kConfiguration, name_ + ": gate driving '" + g.output +
                                                 "' has wrong arity for " +
                                                 std::string(to_string(g.kind)));
    }
    CompiledGate cg{g.kind, {-1, -1, -1}, -1};
    for (std::size_t i = 0; i < g.inputs.size(); ++i) {
      int idx = net_index(g.inputs[i]);
      if (idx < 0) {
        throw Error(ErrorCode::kConfiguration,
                    name_ + ": net '" + g.inputs[i] + "' used before it is defined");
      }
      cg.in[i] = idx;
    }
    cg.out = define(g.output);
    compiled_.push_back(cg);
  }
  if (nets_.size() > 32) {
    throw Error(ErrorCode::kConfiguration, name_ + ": more than 32 nets");
  }

  for (const auto& out : outputs_) {
    int idx = net_index(out);
    if (idx < 0) {
      throw Error(ErrorCode::kConfiguration, name_ + ": output '" + out + "' is undriven");
    }
    output_index_.push_back(idx);
  }
}

int CellNetlist::net_index(std::string_view net) const {
  auto it = std::find(nets_.begin(), nets_.end(), net);
  return it == nets_.end() ? -1 : static_cast<int>(it - nets_.begin());
}

std::uint32_t CellNetlist::evaluate(std::uint32_t input_bits) const {
  std::uint32_t v = input_bits & ((1u << inputs_.size()) - 1u);
  auto at = [&](int idx) { return (v >> idx) & 1u; };
  for (const auto& g : compiled_) {
    std::uint32_t r = 0;
    switch (g.kind) {
      case GateKind::kNot:
        r = at(g.in[0]) ^ 1u;
        break;
      case GateKind::kAnd2:
        r = at(g.in[0]) & at(g.in[1]);
        break;
      case GateKind::kOr2:
        r = at(g.in[0]) | at(g.in[1]);
        break;
      case GateKind::kXor2:
        r = at(g.in[0]) ^ at(g.in[1]);
        break;
      case GateKind::kXnor2:
        r = (at(g.in[0]) ^ at(g.in[1])) ^ 1u;
        break;
      case GateKind::kAnd3:
        r = at(g.in[0]) & at(g.in[1]) & at(g.in[2]);
        break;
    }
    v |= r << g.out;
  }
  std::uint32_t out = 0;
  for (std::size_t j = 0; j < output_index_.size(); ++j) {
    out |= at(output_index_[j]) << j;
  }
  return out;
}

int CellNetlist::depth(std::string_view output) const {
  int target = net_index(output);
  if (target < 0 || std::find(outputs_.begin(), outputs_.end(), output) == outputs_.end()) {
    throw Error(ErrorCode::kInvalidOutput,
                name_ + ": no output named '" + std::string(output) + "'");
  }
  std::vector<int> level(nets_.size(), 0);
  for (const auto& g : compiled_) {
    int d = 0;
    for (int i = 0; i < gate_arity(g.kind); ++i) d = std::max(d, level[g.in[i]]);
    level[g.out] = d + 1;
  }
  return level[target];
}

std::string_view to_string(CellKind kind) {
  switch (kind) {
    case CellKind::kFA:
      return "fa";
    case CellKind::kHA:
      return "ha";
    case CellKind::kHADD:
      return "hadd";
    case CellKind::kAccurateP1A:
      return "accurate-p1a";
    case CellKind::kApproxP1A:
      return "approx-p1a";
  }
  return "?";
}

CellKind cell_kind_from_string(std::string_view name) {
  for (auto k : kAllCellKinds) {
    if (to_string(k) == name) return k;
  }
  throw Error(ErrorCode::kInvalidInput, "unknown cell kind '" + std::string(name) + "'");
}

namespace {

using G = GateKind;

CellNetlist make_fa() {
  return CellNetlist("FA", {"A", "B", "Cin"},
                     {{G::kXor2, {"A", "B"}, "p"},
                      {G::kXor2, {"p", "Cin"}, "Sum"},
                      {G::kAnd2, {"A", "B"}, "g"},
                      {G::kAnd2, {"Cin", "p"}, "t"},
                      {G::kOr2, {"g", "t"}, "Cout"}},
                     {"Sum", "Cout"});
}

CellNetlist make_ha() {
  return CellNetlist("HA", {"A", "B"},
                     {{G::kXor2, {"A", "B"}, "Sum"}, {G::kAnd2, {"A", "B"}, "Cout"}},
                     {"Sum", "Cout"});
}

// Sum = (A | Cin) ^ B, Carry = (A | Cin) & B.
CellNetlist make_hadd() {
  return CellNetlist(
      "HADD", {"A", "B", "Cin"},
      {{G::kOr2, {"A", "Cin"}, "o"}, {G::kXor2, {"o", "B"}, "Sum"}, {G::kAnd2, {"o", "B"}, "Cout"}},
      {"Sum", "Cout"});
}

// A + B + Cin + 1 on three output bits. The sum-of-products sum
// MAJ(A,B,Cin) | ~A~B~Cin and the carry A | B | Cin are both masked by
// ~(A&B&Cin) so that the all-ones row encodes 4 on Cout2 alone.
CellNetlist make_accurate_p1a() {
  return CellNetlist("ACCURATE_P1A", {"A", "B", "Cin"},
                     {{G::kNot, {"A"}, "nA"},
                      {G::kNot, {"B"}, "nB"},
                      {G::kNot, {"Cin"}, "nC"},
                      {G::kAnd3, {"nA", "nB", "nC"}, "zero"},
                      {G::kAnd2, {"A", "B"}, "ab"},
                      {G::kAnd2, {"A", "Cin"}, "ac"},
                      {G::kAnd2, {"B", "Cin"}, "bc"},
                      {G::kOr2, {"ab", "ac"}, "m0"},
                      {G::kOr2, {"m0", "bc"}, "maj"},
                      {G::kOr2, {"maj", "zero"}, "sop"},
                      {G::kAnd3, {"A", "B", "Cin"}, "Cout2"},
                      {G::kNot, {"Cout2"}, "nC2"},
                      {G::kAnd2, {"sop", "nC2"}, "Sum"},
                      {G::kOr2, {"A", "B"}, "o0"},
                      {G::kOr2, {"o0", "Cin"}, "any"},
                      {G::kAnd2, {"any", "nC2"}, "Cout"}},
                     {"Sum", "Cout", "Cout2"});
}

// Sum = A | ~(B ^ Cin), Cout = B | Cin.
CellNetlist make_approx_p1a() {
  return CellNetlist("APPROX_P1A", {"A", "B", "Cin"},
                     {{G::kXnor2, {"B", "Cin"}, "t"},
                      {G::kOr2, {"A", "t"}, "Sum"},
                      {G::kOr2, {"B", "Cin"}, "Cout"}},
                     {"Sum", "Cout"});
}

std::array<std::uint8_t, 8> tabulate(const CellNetlist& net) {
  std::array<std::uint8_t, 8> table{};
  const bool two_input = net.inputs().size() == 2;
  for (std::uint32_t row = 0; row < 8; ++row) {
    if (two_input && (row & 4u)) continue;
    table[row] = static_cast<std::uint8_t>(net.evaluate(row));
  }
  return table;
}

struct CellLibrary {
  std::array<CellNetlist, 5> netlists{make_fa(), make_ha(), make_hadd(), make_accurate_p1a(),
                                      make_approx_p1a()};
  std::array<std::array<std::uint8_t, 8>, 5> tables{};

  CellLibrary() {
    for (std::size_t i = 0; i < netlists.size(); ++i) tables[i] = tabulate(netlists[i]);
  }
};

const CellLibrary& library() {
  static const CellLibrary lib;
  return lib;
}

}  // namespace

const CellNetlist& build_cell(CellKind kind) {
  return library().netlists[static_cast<std::size_t>(kind)];
}

const std::array<std::uint8_t, 8>& cell_truth_table(CellKind kind) {
  return library().tables[static_cast<std::size_t>(kind)];
}

CellOutput eval_cell(CellKind kind, Bit a, Bit b, Bit cin) {
  if (kind == CellKind::kHA && cin) {
    throw Error(ErrorCode::kInvalidInput, "HA has no carry-in; cin must be 0");
  }
  const unsigned row = (a ? 1u : 0u) | (b ? 2u : 0u) | (cin ? 4u : 0u);
  const std::uint8_t packed = cell_truth_table(kind)[row];
  CellOutput out;
  out.sum = packed & 1u;
  out.cout = (packed >> 1) & 1u;
  if (kind == CellKind::kAccurateP1A) out.cout2 = (packed >> 2) & 1u;
  return out;
}

void CostModel::validate() const {
  for (auto k : {GateKind::kNot, GateKind::kAnd2, GateKind::kOr2, GateKind::kXor2, GateKind::kXnor2,
                 GateKind::kAnd3}) {
    auto it = gate_cost.find(k);
    if (it == gate_cost.end() || it->second <= 0) {
      throw Error(ErrorCode::kConfiguration,
                  "cost model needs a positive cost for " + std::string(to_string(k)));
    }
  }
}

CellCost cell_cost(CellKind kind, const CostModel& model) {
  model.validate();
  const auto& net = build_cell(kind);
  CellCost cost;
  cost.gate_count = static_cast<int>(net.gate_count());
  for (const auto& g : net.gates()) cost.transistor_count += model.gate_cost.at(g.kind);
  return cost;
}

int critical_path(CellKind kind, CellPort port) {
  switch (port) {
    case CellPort::kSum:
      return build_cell(kind).depth("Sum");
    case CellPort::kCout:
      return build_cell(kind).depth("Cout");
    case CellPort::kCout2:
      if (kind != CellKind::kAccurateP1A) {
        throw Error(ErrorCode::kInvalidOutput,
                    std::string(to_string(kind)) + " has no Cout2 output");
      }
      return build_cell(kind).depth("Cout2");
  }
  throw Error(ErrorCode::kInvalidOutput, "unknown port");
}

}  // namespace hoaa
