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
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hoaa/apps.hpp"
#include "hoaa/cases.hpp"
#include "hoaa/metrics.hpp"

namespace hoaa::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitUnwritable = 3;

// Directory used for reports when --output is not given.
inline constexpr const char* kOutputDirEnv = "HOAA_OUTPUT_DIR";

struct RunConfig {
  std::string command;
  int width = 8;
  int m = 1;
  P1AVariant variant = P1AVariant::kApprox;
  Mode mode = Mode::kOverestimate;
  std::optional<std::uint64_t> trials;  // default 2^(width + 1)
  std::uint64_t seed = 42;
  std::string format = "csv";
  std::string output;
  Method method = Method::kMonteCarlo;
  CaseKind case_kind = CaseKind::kSubtract;
  CellKind cell = CellKind::kApproxP1A;
  int threads = 0;
  bool random_cin = false;
  bool power_gate = false;
  std::optional<std::uint64_t> a, b, x;
  int shift = 1;
  AFSelect sel = AFSelect::kSigmoid;
  int points = 256;
  int fxp_width = 16;
  int frac_bits = 12;
  int iterations = 12;
};

// `args` excludes the program name. Reports go to --output, else to
// $HOAA_OUTPUT_DIR/<command>.<format>, else to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Executes an already-parsed configuration and returns the report text.
std::string render(const RunConfig& cfg);

}  // namespace hoaa::cli
