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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hoaa/cli.hpp"
#include "hoaa/report_io.hpp"

using namespace hoaa;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("hoaa_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("truth-table matches golden files") {
  auto r = run_cli({"truth-table", "--cell", "approx-p1a"});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.out == read_file(fs::path(HOAA_GOLDEN_DIR) / "truth_table_approx_p1a.csv"));
  r = run_cli({"truth-table", "--cell", "accurate-p1a"});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.out == read_file(fs::path(HOAA_GOLDEN_DIR) / "truth_table_accurate_p1a.csv"));
}

TEST_CASE("exhaustive subtract metrics") {
  const auto r =
      run_cli({"metrics", "--case", "subtract", "--width", "8", "--method", "exhaustive"});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.out == read_file(fs::path(HOAA_GOLDEN_DIR) / "metrics_subtract_exhaustive.csv"));
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 2);
  const ErrorReport rep = report_from_csv_row(rows[1]);
  CHECK(rep.n_samples == 65536);
  CHECK(rep.error_rate == 0.25);
  CHECK(rep.med == 0.25);
  CHECK(rep.max_abs_ed == 1);
}

TEST_CASE("configuration errors exit with code 2") {
  CHECK(run_cli({"metrics", "--width", "0"}).code == cli::kExitConfig);
  CHECK(run_cli({"metrics", "--width", "65"}).code == cli::kExitConfig);
  CHECK(run_cli({"metrics", "--case", "subtract", "--m", "2"}).code == cli::kExitConfig);
  CHECK(run_cli({"metrics", "--mode", "sideways"}).code == cli::kExitConfig);
  CHECK(run_cli({"metrics", "--case", "add", "--width", "63"}).code == cli::kExitConfig);
  CHECK(run_cli({"metrics", "--method", "exhaustive", "--case", "add", "--width", "14"}).code ==
        cli::kExitConfig);
  CHECK(run_cli({"frobnicate"}).code == cli::kExitConfig);
  CHECK(run_cli({"subtract", "--a", "3"}).code == cli::kExitConfig);
  const auto r = run_cli({"metrics", "--width", "0"});
  CHECK(!r.err.empty());
  CHECK(r.out.empty());
}

TEST_CASE("unwritable output exits with code 3") {
  const fs::path dir = scratch_dir("unwritable");
  const auto target = dir / "missing" / "deeper" / "out.csv";
  const auto r = run_cli({"truth-table", "--output", target.string()});
  CHECK(r.code == cli::kExitUnwritable);
  CHECK(!fs::exists(target));
}

TEST_CASE("output directory from environment") {
  const fs::path dir = scratch_dir("env");
  REQUIRE(setenv(cli::kOutputDirEnv, dir.c_str(), 1) == 0);
  const auto r = run_cli({"truth-table", "--cell", "approx-p1a"});
  unsetenv(cli::kOutputDirEnv);
  REQUIRE(r.code == cli::kExitOk);
  CHECK(read_file(dir / "truth-table.csv") ==
        read_file(fs::path(HOAA_GOLDEN_DIR) / "truth_table_approx_p1a.csv"));

  const auto explicit_path = dir / "explicit.json";
  REQUIRE(setenv(cli::kOutputDirEnv, dir.c_str(), 1) == 0);
  const auto r2 = run_cli({"dump-cell", "--format", "json", "-o", explicit_path.string()});
  unsetenv(cli::kOutputDirEnv);
  REQUIRE(r2.code == cli::kExitOk);
  CHECK(fs::exists(explicit_path));
  CHECK(!fs::exists(dir / "dump-cell.json"));
}

TEST_CASE("identical configurations give identical bytes") {
  const std::vector<std::vector<std::string>> configs = {
      {"metrics", "--case", "add", "--width", "10", "--m", "2", "--random-cin"},
      {"metrics", "--case", "subtract", "--width", "12", "--seed", "7", "--format", "json"},
      {"sweep", "--case", "add", "--width", "6", "--m", "3"},
      {"af", "--sel", "tanh", "--points", "64"},
      {"metrics", "--case", "af", "--sel", "sigmoid", "--threads", "3"},
  };
  for (const auto& args : configs) {
    CAPTURE(args[0]);
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    REQUIRE(first.code == cli::kExitOk);
    CHECK(first.out == second.out);
  }
  auto one = run_cli({"metrics", "--case", "subtract", "--width", "12", "--threads", "1"});
  auto many = run_cli({"metrics", "--case", "subtract", "--width", "12", "--threads", "4"});
  CHECK(one.out == many.out);
}

TEST_CASE("every CSV output is round-trippable") {
  const std::vector<std::vector<std::string>> configs = {
      {"truth-table", "--cell", "fa"},
      {"truth-table", "--cell", "ha"},
      {"dump-cell", "--cell", "hadd"},
      {"sweep", "--case", "loa", "--width", "6", "--m", "2", "--method", "exhaustive"},
      {"metrics", "--case", "round", "--width", "10", "--shift", "2"},
      {"metrics", "--case", "cell", "--cell", "approx-p1a"},
      {"subtract", "--a", "5", "--b", "9"},
      {"round", "--x", "22", "--shift", "2"},
      {"af", "--sel", "sigmoid", "--points", "16"},
  };
  for (const auto& args : configs) {
    CAPTURE(args[0]);
    const auto r = run_cli(args);
    REQUIRE(r.code == cli::kExitOk);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() >= 2);
    for (const auto& row : rows) CHECK(row.size() == rows[0].size());
    CHECK(write_csv(rows) == r.out);
  }
}

TEST_CASE("sweep marks unsupported points") {
  const auto r = run_cli({"sweep", "--case", "add", "--width", "6", "--m", "3", "--method",
                          "exhaustive", "--format", "json"});
  REQUIRE(r.code == cli::kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  int unsupported = 0;
  for (const auto& p : doc.at("points")) {
    const bool cout2_reachable = p.at("variant") == "accurate-p1a" &&
                                 p.at("mode") == "overestimate" && p.at("m").get<int>() >= 2;
    CHECK((p.at("status") == "unsupported") == cout2_reachable);
    if (cout2_reachable) {
      ++unsupported;
      CHECK(p.at("position") == 1);
    }
  }
  CHECK(unsupported == 2);
}

TEST_CASE("JSON outputs") {
  auto r = run_cli({"dump-cell", "--cell", "approx-p1a", "--format", "json"});
  REQUIRE(r.code == cli::kExitOk);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("schema_version") == kSchemaVersion);
  CHECK(doc.at("gates").size() == 3);
  CHECK(doc.at("cost").at("gate_count") == 3);
  CHECK(doc.at("critical_path").at("Sum") == 2);
  CHECK(doc.at("critical_path").at("Cout") == 1);

  r = run_cli({"metrics", "--case", "subtract", "--method", "exhaustive", "--format", "json"});
  REQUIRE(r.code == cli::kExitOk);
  doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("report").at("seed").is_null());
  CHECK(doc.at("report").at("error_rate") == 0.25);
  CHECK(doc.contains("reference"));

  r = run_cli({"metrics", "--case", "subtract", "--format", "json", "--seed", "9"});
  REQUIRE(r.code == cli::kExitOk);
  doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("report").at("seed") == 9);
  CHECK(doc.at("report").at("rng") == "splitmix64");
  CHECK(doc.at("report").at("n_samples") == 512);
}

TEST_CASE("binary exit codes") {
  const std::string bin = HOAA_CLI_BINARY;
  const fs::path dir = scratch_dir("binary");
  auto status = [&](const std::string& args) {
    const int raw =
        std::system((bin + " " + args + " > " + (dir / "out").string() + " 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  CHECK(status("truth-table") == cli::kExitOk);
  CHECK(status("metrics --width 0") == cli::kExitConfig);
  CHECK(status("truth-table -o " + (dir / "no" / "such" / "x.csv").string()) ==
        cli::kExitUnwritable);
}
