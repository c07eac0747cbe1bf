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

// Frozen serialization formats. CSV column orders never change within a
// schema version; JSON documents carry "schema_version".

#include <string>
#include <string_view>
#include <vector>

#include "hoaa/apps.hpp"
#include "hoaa/cells.hpp"
#include "hoaa/metrics.hpp"
#include "json.hpp"

namespace hoaa {

inline constexpr int kSchemaVersion = 1;

// Shortest decimal that parses back to the same double.
std::string format_double(double value);
double parse_double(std::string_view text);

using CsvRow = std::vector<std::string>;

// Fields never contain commas, quotes or newlines, so no quoting is applied.
std::string write_csv(const std::vector<CsvRow>& rows);
std::vector<CsvRow> parse_csv(std::string_view text);

// width, method, seed, n_samples, mse, mean_signed_error, med, nmed, mred,
// error_rate, max_abs_ed
CsvRow report_csv_header();
CsvRow to_csv_row(const ErrorReport& report);
ErrorReport report_from_csv_row(const CsvRow& row);

nlohmann::json to_json(const ErrorReport& report);
ErrorReport report_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const CellNetlist& netlist);

// A, B, Cin, Sum, Cout[, Cout2] over the eight rows with A most significant.
std::vector<CsvRow> truth_table_rows(CellKind kind);

// z, sel, mode, value, oracle, abs_err
CsvRow grid_csv_header();
CsvRow to_csv_row(const GridPoint& point);

}  // namespace hoaa
