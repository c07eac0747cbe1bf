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

#include "hoaa/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "CLI11.hpp"
#include "hoaa/reference_data.hpp"
#include "hoaa/report_io.hpp"

namespace hoaa::cli {

namespace {

using nlohmann::json;

template <typename Enum>
std::vector<std::string> keys(std::initializer_list<Enum> values) {
  std::vector<std::string> out;
  for (Enum v : values) out.emplace_back(to_string(v));
  return out;
}

// Enum-valued flags are parsed as text and converted once parsing succeeds.
struct EnumFlags {
  std::string variant{"approx-p1a"};
  std::string mode{"overestimate"};
  std::string method{"monte-carlo"};
  std::string case_kind{"subtract"};
  std::string cell{"approx-p1a"};
  std::string sel{"sigmoid"};

  void apply(RunConfig& cfg) const {
    cfg.variant = variant_from_string(variant);
    cfg.mode = mode_from_string(mode);
    cfg.method = method_from_string(method);
    cfg.case_kind = case_kind_from_string(case_kind);
    cfg.cell = cell_kind_from_string(cell);
    cfg.sel = af_select_from_string(sel);
  }
};

ChainConfig chain_of(const RunConfig& c) {
  return ChainConfig{c.width, c.m, c.variant, c.power_gate};
}

CaseOptions case_options(const RunConfig& c, CaseKind kind) {
  CaseOptions o;
  o.kind = kind;
  o.chain = chain_of(c);
  o.mode = c.mode;
  o.random_cin = c.random_cin;
  o.shift = c.shift;
  o.cell = c.cell;
  o.sel = c.sel;
  o.format = FixedPointFormat{c.fxp_width, c.frac_bits};
  o.cordic_iterations = c.iterations;
  return o;
}

TrialPlan plan_of(const RunConfig& c, const CaseStudy& study) {
  TrialPlan plan =
      c.method == Method::kExhaustive ? study.exhaustive() : study.monte_carlo(c.seed, c.trials);
  plan.workers = c.threads;
  return plan;
}

json config_json(const RunConfig& c) {
  return {{"width", c.width},
          {"m", c.m},
          {"variant", to_string(c.variant)},
          {"mode", to_string(c.mode)},
          {"power_gate_idle", c.power_gate},
          {"random_cin", c.random_cin}};
}

json reference_block(std::string_view key) {
  const auto& metrics = reference_values().at("error_metrics_percent");
  if (!metrics.contains(key)) return nullptr;
  return {{"label", reference_values().at("label")},
          {"units", "percent"},
          {"values", metrics.at(std::string(key))}};
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

std::string render_metrics(const RunConfig& c) {
  const CaseStudy study = make_case(case_options(c, c.case_kind));
  const ErrorReport report = evaluate(study.domain, study.approx, study.exact, plan_of(c, study));
  if (c.format == "csv") return write_csv({report_csv_header(), to_csv_row(report)});
  json doc = {{"schema_version", kSchemaVersion},
              {"command", "metrics"},
              {"case", to_string(c.case_kind)},
              {"config", config_json(c)},
              {"report", to_json(report)}};
  doc["reference"] = reference_block(to_string(c.case_kind));
  return dump(doc);
}

std::string render_sweep(const RunConfig& c) {
  const CaseKind kind = c.case_kind;
  if (kind == CaseKind::kCell || kind == CaseKind::kAf) {
    throw Error(ErrorCode::kConfiguration, "sweep supports add, loa, subtract and round");
  }
  const bool single_m = kind == CaseKind::kSubtract || kind == CaseKind::kRound;
  std::vector<CsvRow> rows;
  CsvRow header = {"case", "m", "variant", "mode", "status"};
  for (auto& h : report_csv_header()) header.push_back(h);
  rows.push_back(header);
  json entries = json::array();

  for (int m = single_m ? 1 : 0; m <= (single_m ? 1 : c.m); ++m) {
    for (P1AVariant variant : {P1AVariant::kApprox, P1AVariant::kAccurate}) {
      for (Mode mode : {Mode::kAccurate, Mode::kOverestimate}) {
        RunConfig point = c;
        point.m = m;
        point.variant = variant;
        point.mode = mode;
        CsvRow row = {std::string(to_string(kind)), std::to_string(m),
                      std::string(to_string(variant)), std::string(to_string(mode))};
        json entry = {{"case", to_string(kind)},
                      {"m", m},
                      {"variant", to_string(variant)},
                      {"mode", to_string(mode)}};
        try {
          const CaseStudy study = make_case(case_options(point, kind));
          const ErrorReport report =
              evaluate(study.domain, study.approx, study.exact, plan_of(point, study));
          row.push_back("ok");
          for (auto& f : to_csv_row(report)) row.push_back(f);
          entry["status"] = "ok";
          entry["report"] = to_json(report);
        } catch (const UnsupportedConfigurationError& e) {
          row.push_back("unsupported");
          row.resize(header.size());
          entry["status"] = "unsupported";
          entry["position"] = e.position();
        }
        rows.push_back(row);
        entries.push_back(entry);
      }
    }
  }
  if (c.format == "csv") return write_csv(rows);
  return dump({{"schema_version", kSchemaVersion},
               {"command", "sweep"},
               {"config", config_json(c)},
               {"points", entries}});
}

std::string render_truth_table(const RunConfig& c) {
  const auto rows = truth_table_rows(c.cell);
  if (c.format == "csv") return write_csv(rows);
  json body = json::array();
  for (std::size_t i = 1; i < rows.size(); ++i) {
    json r = json::array();
    for (const auto& v : rows[i]) r.push_back(std::stoi(v));
    body.push_back(r);
  }
  return dump({{"schema_version", kSchemaVersion},
               {"cell", to_string(c.cell)},
               {"columns", rows.front()},
               {"rows", body}});
}

std::string render_dump_cell(const RunConfig& c) {
  const CellNetlist netlist = build_cell(c.cell);
  if (c.format == "csv") {
    std::vector<CsvRow> rows = {{"kind", "inputs", "output"}};
    for (const auto& g : netlist.gates()) {
      std::string ins;
      for (const auto& in : g.inputs) ins += (ins.empty() ? "" : " ") + in;
      rows.push_back({std::string(to_string(g.kind)), ins, g.output});
    }
    return write_csv(rows);
  }
  json doc = to_json(netlist);
  const CellCost cost = cell_cost(c.cell);
  doc["cost"] = {{"gate_count", cost.gate_count}, {"transistor_count", cost.transistor_count}};
  json paths = {{"Sum", critical_path(c.cell, CellPort::kSum)},
                {"Cout", critical_path(c.cell, CellPort::kCout)}};
  if (c.cell == CellKind::kAccurateP1A) paths["Cout2"] = critical_path(c.cell, CellPort::kCout2);
  doc["critical_path"] = paths;

  const std::string key(to_string(c.cell));
  json reported = json::object();
  for (const char* table : {"gate_counts", "logic_gates", "transistors"}) {
    const auto& t = reference_values().at(table);
    if (t.contains(key)) reported[table] = t.at(key);
  }
  if (!reported.empty()) {
    doc["reference"] = {{"label", reference_values().at("label")}, {"values", reported}};
  }
  return dump(doc);
}

std::uint64_t required(const std::optional<std::uint64_t>& v, const char* flag) {
  if (!v) throw Error(ErrorCode::kConfiguration, std::string(flag) + " is required");
  return *v;
}

std::string render_subtract(const RunConfig& c) {
  const ChainConfig cfg = chain_of(c);
  const BitWord a(c.width, required(c.a, "--a"));
  const BitWord b(c.width, required(c.b, "--b"));
  const SubtractResult r = subtract(cfg, c.mode, a, b);
  const std::uint64_t exact = (a.bits() - b.bits()) & BitWord::mask_for(c.width);
  if (c.format == "csv") {
    return write_csv(
        {{"a", "b", "width", "mode", "variant", "result", "borrow", "exact"},
         {std::to_string(a.bits()), std::to_string(b.bits()), std::to_string(c.width),
          std::string(to_string(c.mode)), std::string(to_string(c.variant)),
          std::to_string(r.result.bits()), r.borrow ? "1" : "0", std::to_string(exact)}});
  }
  return dump({{"schema_version", kSchemaVersion},
               {"a", a.bits()},
               {"b", b.bits()},
               {"config", config_json(c)},
               {"result", r.result.bits()},
               {"borrow", r.borrow ? 1 : 0},
               {"borrow_convention", "borrow = NOT carry_out of the final addition pass"},
               {"exact", exact}});
}

std::string render_round(const RunConfig& c) {
  const ChainConfig cfg = chain_of(c);
  const BitWord x(c.width, required(c.x, "--x"));
  const BitWord r = round_to_even(x, c.shift, cfg, c.mode);
  const BitWord exact = round_to_even(x, c.shift, cfg, Mode::kAccurate);
  if (c.format == "csv") {
    return write_csv({{"x", "shift", "width", "mode", "variant", "result", "exact"},
                      {std::to_string(x.bits()), std::to_string(c.shift), std::to_string(c.width),
                       std::string(to_string(c.mode)), std::string(to_string(c.variant)),
                       std::to_string(r.bits()), std::to_string(exact.bits())}});
  }
  return dump({{"schema_version", kSchemaVersion},
               {"x", x.bits()},
               {"shift", c.shift},
               {"config", config_json(c)},
               {"result", r.bits()},
               {"exact", exact.bits()}});
}

std::string render_af(const RunConfig& c) {
  const CordicConfig cordic = CordicConfig::standard(FixedPointFormat{c.fxp_width, c.frac_bits},
                                                     c.iterations, c.mode, c.variant);
  const auto grid = evaluate_grid(c.sel, cordic, c.points);
  if (c.format == "csv") {
    std::vector<CsvRow> rows = {grid_csv_header()};
    for (const auto& p : grid) rows.push_back(to_csv_row(p));
    return write_csv(rows);
  }
  json points = json::array();
  for (const auto& p : grid) {
    points.push_back({{"z", p.z},
                      {"sel", to_string(p.sel)},
                      {"mode", to_string(p.mode)},
                      {"value", p.value},
                      {"oracle", p.oracle},
                      {"abs_err", p.abs_err},
                      {"saturated", p.saturated}});
  }
  return dump({{"schema_version", kSchemaVersion},
               {"format", {{"total_bits", c.fxp_width}, {"frac_bits", c.frac_bits}}},
               {"iterations", c.iterations},
               {"variant", to_string(c.variant)},
               {"points", points}});
}

int write_report(const RunConfig& c, const std::string& text, std::ostream& out,
                 std::ostream& err) {
  std::filesystem::path path = c.output;
  if (path.empty()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) {
      path = std::filesystem::path(dir) / (c.command + "." + c.format);
    }
  }
  if (path.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file || !(file << text) || !file.flush()) {
    err << "error: cannot write report to '" << path.string() << "'\n";
    return kExitUnwritable;
  }
  return kExitOk;
}

}  // namespace

std::string render(const RunConfig& c) {
  if (c.command == "metrics") return render_metrics(c);
  if (c.command == "sweep") return render_sweep(c);
  if (c.command == "truth-table") return render_truth_table(c);
  if (c.command == "dump-cell") return render_dump_cell(c);
  if (c.command == "subtract") return render_subtract(c);
  if (c.command == "round") return render_round(c);
  if (c.command == "af") return render_af(c);
  throw Error(ErrorCode::kConfiguration, "unknown command '" + c.command + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Bit-accurate simulator for plus-one adders and HOAA(N, m) chains", "hoaa_cli"};
  app.require_subcommand(1);

  EnumFlags text;
  const auto variants = {P1AVariant::kApprox, P1AVariant::kAccurate};
  const auto modes = {Mode::kAccurate, Mode::kOverestimate};
  const auto methods = {Method::kExhaustive, Method::kMonteCarlo};
  const auto cases = {CaseKind::kCell,  CaseKind::kAdd, CaseKind::kSubtract,
                      CaseKind::kRound, CaseKind::kLoa, CaseKind::kAf};
  const auto cells = {CellKind::kFA, CellKind::kHA, CellKind::kHADD, CellKind::kAccurateP1A,
                      CellKind::kApproxP1A};
  const auto sels = {AFSelect::kSigmoid, AFSelect::kTanh};

  struct Command {
    const char* name;
    const char* help;
  };
  const Command commands[] = {
      {"dump-cell", "Print a cell netlist (gate list as CSV, or netlist with cost and critical paths as JSON)"},
      {"truth-table", "Print all input rows of a cell"},
      {"sweep", "Error reports over (m, variant, mode) for one case"},
      {"metrics", "Error report for one case study"},
      {"subtract", "Subtract two words on the HOAA"},
      {"round", "Round x / 2^shift half to even on the HOAA"},
      {"af", "Evaluate the CORDIC sigmoid/tanh over a grid in [-1, 1]"},
  };

  for (const auto& cmd : commands) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    sub->callback([&cfg, name = cmd.name] { cfg.command = name; });
    sub->add_option("--width", cfg.width, "Word width N")->check(CLI::Range(1, 64));
    sub->add_option("--m", cfg.m, "Number of reconfigurable LSB positions")
        ->check(CLI::Range(0, 64));
    sub->add_option("--variant", text.variant, "approx-p1a | accurate-p1a")
        ->check(CLI::IsMember(keys(variants)));
    sub->add_option("--mode", text.mode, "accurate | overestimate")
        ->check(CLI::IsMember(keys(modes)));
    sub->add_option("--trials", cfg.trials, "Monte Carlo trials (default 2^(width+1))")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "Monte Carlo seed");
    sub->add_option("--format", cfg.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output,-o", cfg.output, "Report path");
    sub->add_option("--method", text.method, "exhaustive | monte-carlo")
        ->check(CLI::IsMember(keys(methods)));
    sub->add_option("--case", text.case_kind, "cell | add | subtract | round | loa | af")
        ->check(CLI::IsMember(keys(cases)));
    sub->add_option("--cell", text.cell, "fa | ha | hadd | accurate-p1a | approx-p1a")
        ->check(CLI::IsMember(keys(cells)));
    sub->add_option("--threads", cfg.threads, "OpenMP workers (0 = default)")
        ->check(CLI::NonNegativeNumber);
    sub->add_flag("--random-cin", cfg.random_cin, "add case: draw cin as an operand");
    sub->add_flag("--power-gate", cfg.power_gate, "Record idle-P1A power gating in the report");
    sub->add_option("--a", cfg.a, "Minuend");
    sub->add_option("--b", cfg.b, "Subtrahend");
    sub->add_option("--x", cfg.x, "Value to round");
    sub->add_option("--shift", cfg.shift, "Rounding shift k")->check(CLI::Range(1, 63));
    sub->add_option("--sel", text.sel, "sigmoid | tanh")->check(CLI::IsMember(keys(sels)));
    sub->add_option("--points", cfg.points, "Grid points")->check(CLI::Range(1, 1 << 20));
    sub->add_option("--fxp-width", cfg.fxp_width, "Fixed-point width W")->check(CLI::Range(2, 32));
    sub->add_option("--frac-bits", cfg.frac_bits, "Fixed-point fractional bits F");
    sub->add_option("--iterations", cfg.iterations, "CORDIC iterations")->check(CLI::Range(1, 62));
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  std::string report;
  try {
    text.apply(cfg);
    report = render(cfg);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return write_report(cfg, report, out, err);
}

}  // namespace hoaa::cli
