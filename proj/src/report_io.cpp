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

#include "hoaa/report_io.hpp"

#include <charconv>
#include <cmath>

#include "hoaa/rng.hpp"

namespace hoaa {

std::string format_double(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw Error(ErrorCode::kInvalidInput, "cannot format double");
  return std::string(buf, end);
}

double parse_double(std::string_view text) {
  double value = 0.0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw Error(ErrorCode::kInvalidInput, "not a number: '" + std::string(text) + "'");
  }
  return value;
}

namespace {

template <typename Int>
Int parse_int(std::string_view text) {
  Int value{};
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw Error(ErrorCode::kInvalidInput, "not an integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::string write_csv(const std::vector<CsvRow>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += row[i];
    }
    out += '\n';
  }
  return out;
}

std::vector<CsvRow> parse_csv(std::string_view text) {
  std::vector<CsvRow> rows;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    CsvRow row;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      row.emplace_back(line.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

CsvRow report_csv_header() {
  return {"width", "method", "seed", "n_samples",  "mse",       "mean_signed_error",
          "med",   "nmed",   "mred", "error_rate", "max_abs_ed"};
}

CsvRow to_csv_row(const ErrorReport& r) {
  return {std::to_string(r.width),
          std::string(to_string(r.method)),
          r.seed ? std::to_string(*r.seed) : std::string(),
          std::to_string(r.n_samples),
          format_double(r.mse),
          format_double(r.mean_signed_error),
          format_double(r.med),
          format_double(r.nmed),
          format_double(r.mred),
          format_double(r.error_rate),
          std::to_string(r.max_abs_ed)};
}

ErrorReport report_from_csv_row(const CsvRow& row) {
  if (row.size() != report_csv_header().size()) {
    throw Error(ErrorCode::kInvalidInput,
                "error report row needs 11 columns, got " + std::to_string(row.size()));
  }
  ErrorReport r;
  r.width = parse_int<int>(row[0]);
  r.method = method_from_string(row[1]);
  if (!row[2].empty()) r.seed = parse_int<std::uint64_t>(row[2]);
  r.n_samples = parse_int<std::uint64_t>(row[3]);
  r.mse = parse_double(row[4]);
  r.mean_signed_error = parse_double(row[5]);
  r.med = parse_double(row[6]);
  r.nmed = parse_double(row[7]);
  r.mred = parse_double(row[8]);
  r.error_rate = parse_double(row[9]);
  r.max_abs_ed = parse_int<std::int64_t>(row[10]);
  return r;
}

nlohmann::json to_json(const ErrorReport& r) {
  nlohmann::json doc = {
      {"schema_version", kSchemaVersion},
      {"width", r.width},
      {"method", to_string(r.method)},
      {"n_samples", r.n_samples},
      {"mse", r.mse},
      {"mean_signed_error", r.mean_signed_error},
      {"med", r.med},
      {"nmed", r.nmed},
      {"mred", r.mred},
      {"error_rate", r.error_rate},
      {"max_abs_ed", r.max_abs_ed},
  };
  if (r.seed) {
    doc["seed"] = *r.seed;
    doc["rng"] = SplitMix64::kAlgorithm;
  } else {
    doc["seed"] = nullptr;
  }
  return doc;
}

ErrorReport report_from_json(const nlohmann::json& doc) {
  ErrorReport r;
  r.width = doc.at("width").get<int>();
  r.method = method_from_string(doc.at("method").get<std::string>());
  if (!doc.at("seed").is_null()) r.seed = doc.at("seed").get<std::uint64_t>();
  r.n_samples = doc.at("n_samples").get<std::uint64_t>();
  r.mse = doc.at("mse").get<double>();
  r.mean_signed_error = doc.at("mean_signed_error").get<double>();
  r.med = doc.at("med").get<double>();
  r.nmed = doc.at("nmed").get<double>();
  r.mred = doc.at("mred").get<double>();
  r.error_rate = doc.at("error_rate").get<double>();
  r.max_abs_ed = doc.at("max_abs_ed").get<std::int64_t>();
  return r;
}

nlohmann::json to_json(const CellNetlist& netlist) {
  nlohmann::json gates = nlohmann::json::array();
  for (const auto& g : netlist.gates()) {
    gates.push_back({{"kind", to_string(g.kind)}, {"in", g.inputs}, {"out", g.output}});
  }
  return {{"schema_version", kSchemaVersion},
          {"name", netlist.name()},
          {"inputs", netlist.inputs()},
          {"gates", gates},
          {"outputs", netlist.outputs()}};
}

std::vector<CsvRow> truth_table_rows(CellKind kind) {
  const bool has_cout2 = kind == CellKind::kAccurateP1A;
  const bool has_cin = kind != CellKind::kHA;
  std::vector<CsvRow> rows;
  CsvRow header = {"A", "B"};
  if (has_cin) header.push_back("Cin");
  header.insert(header.end(), {"Sum", "Cout"});
  if (has_cout2) header.push_back("Cout2");
  rows.push_back(header);

  auto bit = [](bool b) { return std::string(b ? "1" : "0"); };
  for (int r = 0; r < 8; ++r) {
    const bool a = r & 4, b = r & 2, cin = r & 1;
    if (!has_cin && cin) continue;
    const CellOutput out = eval_cell(kind, a, b, cin);
    CsvRow row = {bit(a), bit(b)};
    if (has_cin) row.push_back(bit(cin));
    row.insert(row.end(), {bit(out.sum), bit(out.cout)});
    if (has_cout2) row.push_back(bit(*out.cout2));
    rows.push_back(row);
  }
  return rows;
}

CsvRow grid_csv_header() { return {"z", "sel", "mode", "value", "oracle", "abs_err"}; }

CsvRow to_csv_row(const GridPoint& p) {
  return {format_double(p.z),     std::string(to_string(p.sel)), std::string(to_string(p.mode)),
          format_double(p.value), format_double(p.oracle),       format_double(p.abs_err)};
}

}  // namespace hoaa
