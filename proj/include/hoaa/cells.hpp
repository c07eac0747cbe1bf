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

// Gate-level models of the single-bit adder cells: the conventional full
// adder, the textbook half adder, the HADD approximate cell and the accurate
// and approximate plus-one adders (P1A).

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hoaa/error.hpp"

namespace hoaa {

using Bit = bool;

enum class GateKind : std::uint8_t { kNot, kAnd2, kOr2, kXor2, kXnor2, kAnd3 };

std::string_view to_string(GateKind kind);
GateKind gate_kind_from_string(std::string_view name);
int gate_arity(GateKind kind);

struct Gate {
  GateKind kind;
  std::vector<std::string> inputs;
  std::string output;
};

// A combinational netlist with gates stored in topological order. The
// constructor rejects cycles, undefined nets, duplicate drivers and arity
// mismatches, so evaluation is total on every input combination.
class CellNetlist {
 public:
  CellNetlist(std::string name, std::vector<std::string> inputs, std::vector<Gate> gates,
              std::vector<std::string> outputs);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& inputs() const { return inputs_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<std::string>& outputs() const { return outputs_; }

  // Input i of the netlist is bit i of `input_bits`; output j of the result
  // is bit j of the returned mask.
  std::uint32_t evaluate(std::uint32_t input_bits) const;

  // Longest input-to-output path counting each gate as one delay unit.
  int depth(std::string_view output) const;

  std::size_t gate_count() const { return gates_.size(); }

 private:
  struct CompiledGate {
    GateKind kind;
    std::array<int, 3> in;
    int out;
  };

  int net_index(std::string_view net) const;

  std::string name_;
  std::vector<std::string> inputs_;
  std::vector<Gate> gates_;
  std::vector<std::string> outputs_;
  std::vector<std::string> nets_;
  std::vector<CompiledGate> compiled_;
  std::vector<int> output_index_;
};

enum class CellKind : std::uint8_t { kFA, kHA, kHADD, kAccurateP1A, kApproxP1A };

inline constexpr std::array<CellKind, 5> kAllCellKinds = {
    CellKind::kFA, CellKind::kHA, CellKind::kHADD, CellKind::kAccurateP1A, CellKind::kApproxP1A};

std::string_view to_string(CellKind kind);
CellKind cell_kind_from_string(std::string_view name);

struct CellOutput {
  Bit sum = false;
  Bit cout = false;
  std::optional<Bit> cout2;

  int value() const { return (cout2.value_or(false) ? 4 : 0) + (cout ? 2 : 0) + (sum ? 1 : 0); }
  friend bool operator==(const CellOutput&, const CellOutput&) = default;
};

enum class CellPort : std::uint8_t { kSum, kCout, kCout2 };

// Canonical netlist of a cell. The returned reference stays valid for the
// lifetime of the program.
const CellNetlist& build_cell(CellKind kind);

// Throws kInvalidInput for HA with cin = 1.
CellOutput eval_cell(CellKind kind, Bit a, Bit b, Bit cin);

// Packed (sum | cout << 1 | cout2 << 2) outputs for all eight (a, b, cin)
// rows, indexed by a | b << 1 | cin << 2. Built once from the netlists; the
// word-level chains read from this table. HA rows with cin = 1 are zero.
const std::array<std::uint8_t, 8>& cell_truth_table(CellKind kind);

struct CostModel {
  std::map<GateKind, int> gate_cost = {{GateKind::kNot, 2},   {GateKind::kAnd2, 6},
                                       {GateKind::kOr2, 6},   {GateKind::kXor2, 8},
                                       {GateKind::kXnor2, 8}, {GateKind::kAnd3, 8}};

  // Throws kConfiguration unless every gate kind has a positive cost.
  void validate() const;
};

struct CellCost {
  int gate_count = 0;
  int transistor_count = 0;
};

CellCost cell_cost(CellKind kind, const CostModel& model = {});

// Throws kInvalidOutput when `port` is kCout2 for a cell without a second
// carry.
int critical_path(CellKind kind, CellPort port);

}  // namespace hoaa
