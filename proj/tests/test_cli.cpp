// Copyright 2026 The imbeval authors
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

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "imbeval/imbeval.hpp"

using imbeval::CurveKind;
using imbeval::RunConfig;
using Catch::Matchers::ContainsSubstring;

namespace {

namespace fs = std::filesystem;

fs::path fixture_path() {
  return fs::path(IMBEVAL_TEST_DATA_DIR) / "fixture_scores.csv";
}

fs::path scratch_dir(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() / ("imbeval_cli_" + tag);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream file(path, std::ios::binary);
  std::ostringstream out;
  out << file.rdbuf();
  return out.str();
}

int run_quiet(const RunConfig& config, std::string* err_text = nullptr) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = imbeval::run(config, out, err);
  if (err_text != nullptr) *err_text = err.str();
  return code;
}

}  // namespace

TEST_CASE("roc run on the two-row dataset writes three vertex rows",
          "[cli]") {
  const fs::path dir = scratch_dir("tworow");
  const fs::path input = dir / "tiny.csv";
  fs::create_directories(dir);
  std::ofstream(input) << "score,label\n0.9,1\n0.2,0\n";

  RunConfig config;
  config.input_path = input.string();
  config.curves = {CurveKind::roc};
  config.out_dir = (dir / "out").string();
  REQUIRE(run_quiet(config) == 0);

  const std::string csv = slurp(dir / "out" / "roc.csv");
  REQUIRE(csv.rfind("threshold,x,y\n", 0) == 0);
  std::size_t rows = 0;
  for (char c : csv) rows += c == '\n' ? 1 : 0;
  REQUIRE(rows == 1 + 3);  // header + sentinel + two distinct scores

  const auto report = nlohmann::json::parse(slurp(dir / "out" / "report.json"));
  REQUIRE(report.at("metrics").at("auc").get<double>() == 1.0);
  REQUIRE(report.at("inputs").at("pos_count") == 1);
}

TEST_CASE("audit invocation without input flags the weak accuracy", "[cli]") {
  const fs::path dir = scratch_dir("audit");

  RunConfig config;
  config.audit = true;
  config.reported_accuracy = 0.97;
  config.ir = 0.01;
  config.out_dir = dir.string();
  REQUIRE(run_quiet(config) == 2);

  const auto report = nlohmann::json::parse(slurp(dir / "report.json"));
  const auto& findings = report.at("audit").at("findings");
  REQUIRE(findings.size() == 1);
  REQUIRE(findings[0].at("rule_id") == "ACC_BELOW_TRIVIAL");
  REQUIRE(findings[0].at("severity") == "error");
}

TEST_CASE("operational errors exit 1", "[cli]") {
  std::string err;

  RunConfig nothing;
  REQUIRE(run_quiet(nothing, &err) == 1);
  REQUIRE_THAT(err, ContainsSubstring("nothing to do"));

  RunConfig no_input;
  no_input.curves = {CurveKind::roc};
  REQUIRE(run_quiet(no_input, &err) == 1);
  REQUIRE_THAT(err, ContainsSubstring("--input"));

  RunConfig missing_file;
  missing_file.curves = {CurveKind::roc};
  missing_file.input_path = "/nonexistent/imbeval.csv";
  REQUIRE(run_quiet(missing_file, &err) == 1);
  REQUIRE_THAT(err, ContainsSubstring("cannot open"));

  const fs::path dir = scratch_dir("single");
  fs::create_directories(dir);
  const fs::path single = dir / "single_class.csv";
  std::ofstream(single) << "score,label\n0.9,1\n0.8,1\n";
  RunConfig single_class;
  single_class.curves = {CurveKind::roc};
  single_class.input_path = single.string();
  single_class.out_dir = (dir / "out").string();
  REQUIRE(run_quiet(single_class, &err) == 1);
  REQUIRE_THAT(err, ContainsSubstring("need both classes"));

  // the same single-class file is fine for PR, which needs only positives
  RunConfig single_class_pr = single_class;
  single_class_pr.curves = {CurveKind::pr};
  REQUIRE(run_quiet(single_class_pr, &err) == 0);

  RunConfig adjprec_without_threshold;
  adjprec_without_threshold.curves = {CurveKind::adjusted_precision};
  adjprec_without_threshold.input_path = fixture_path().string();
  adjprec_without_threshold.out_dir = (dir / "out2").string();
  REQUIRE(run_quiet(adjprec_without_threshold, &err) == 1);
  REQUIRE_THAT(err, ContainsSubstring("--threshold"));

  RunConfig accuracy_without_ir;
  accuracy_without_ir.audit = true;
  accuracy_without_ir.reported_accuracy = 0.9;
  REQUIRE(run_quiet(accuracy_without_ir, &err) == 1);
  REQUIRE_THAT(err, ContainsSubstring("--ir or --p-real"));

  RunConfig bad_roi;
  bad_roi.curves = {CurveKind::roc};
  bad_roi.input_path = fixture_path().string();
  bad_roi.roi = std::make_pair(0.8, 0.2);
  REQUIRE(run_quiet(bad_roi, &err) == 1);
}

TEST_CASE("full fixture run emits every artifact deterministically",
          "[cli]") {
  const fs::path dir = scratch_dir("full");

  RunConfig config;
  config.input_path = fixture_path().string();
  config.curves = {CurveKind::roc, CurveKind::det, CurveKind::pr,
                   CurveKind::adjusted_precision};
  config.p_real = 0.01;
  config.threshold = 0.6;
  config.roi = std::make_pair(0.0, 0.1);
  config.audit = true;
  config.emit_svg = true;
  config.out_dir = (dir / "a").string();
  const int first = run_quiet(config);
  config.out_dir = (dir / "b").string();
  const int second = run_quiet(config);
  REQUIRE(first == second);

  for (const char* name :
       {"roc.csv", "det.csv", "pr.csv", "adjprec.csv", "report.json",
        "roc.svg", "det.svg", "pr.svg", "adjprec.svg"}) {
    CAPTURE(name);
    REQUIRE(fs::exists(dir / "a" / name));
    REQUIRE(slurp(dir / "a" / name) == slurp(dir / "b" / name));
  }

  // p_real present: the pr csv carries the adjusted companion column
  REQUIRE(slurp(dir / "a" / "pr.csv").rfind("threshold,x,y,y_adjusted\n", 0) ==
          0);

  // the prior mismatch between p_test=0.2 and p_real=0.01 is an error finding
  const auto report = nlohmann::json::parse(slurp(dir / "a" / "report.json"));
  bool saw_mismatch = false;
  for (const auto& finding : report.at("audit").at("findings")) {
    if (finding.at("rule_id") == "PRIOR_MISMATCH") {
      saw_mismatch = true;
      REQUIRE(finding.at("severity") == "error");
    }
  }
  REQUIRE(saw_mismatch);
  REQUIRE(first == 2);
}

TEST_CASE("roi defaults to [0, ir] and is reported as defaulted", "[cli]") {
  const fs::path dir = scratch_dir("roidefault");

  RunConfig config;
  config.input_path = fixture_path().string();
  config.curves = {CurveKind::roc};
  config.ir = 0.05;
  config.out_dir = dir.string();
  REQUIRE(run_quiet(config) == 0);

  const auto report = nlohmann::json::parse(slurp(dir / "report.json"));
  REQUIRE(report.at("inputs").at("roi").at("fpr_min").get<double>() == 0.0);
  REQUIRE(report.at("inputs").at("roi").at("fpr_max").get<double>() == 0.05);
  REQUIRE(report.at("inputs").at("roi").at("defaulted") == true);
  REQUIRE(report.at("metrics").contains("pauc_raw"));
  REQUIRE(report.at("metrics").contains("pauc_normalized"));
}

TEST_CASE("audit tolerates single-class data by skipping curve rules",
          "[cli]") {
  const fs::path dir = scratch_dir("auditsingle");
  fs::create_directories(dir);
  const fs::path input = dir / "single.csv";
  std::ofstream(input) << "score,label\n0.9,1\n0.8,1\n";

  RunConfig config;
  config.input_path = input.string();
  config.audit = true;
  config.reported_accuracy = 0.999;
  config.ir = 0.5;
  config.out_dir = (dir / "out").string();
  REQUIRE(run_quiet(config) == 0);

  const auto report = nlohmann::json::parse(slurp(dir / "out" / "report.json"));
  REQUIRE_FALSE(report.at("metrics").contains("auc"));
}

TEST_CASE("audit without any deployment context flags bare AUC", "[cli]") {
  const fs::path dir = scratch_dir("bareauc");

  RunConfig config;
  config.input_path = fixture_path().string();
  config.curves = {CurveKind::roc};
  config.audit = true;
  config.out_dir = dir.string();
  REQUIRE(run_quiet(config) == 0);  // info findings never change the code

  const auto report = nlohmann::json::parse(slurp(dir / "report.json"));
  const auto& findings = report.at("audit").at("findings");
  REQUIRE(findings.size() == 1);
  REQUIRE(findings[0].at("rule_id") == "MISSING_IR_FOR_PRECISION");
  REQUIRE(findings[0].at("severity") == "info");
}

TEST_CASE("emit selection controls the artifact set", "[cli]") {
  const fs::path dir = scratch_dir("emit");

  RunConfig config;
  config.input_path = fixture_path().string();
  config.curves = {CurveKind::roc};
  config.emit_csv = true;
  config.emit_json = false;
  config.emit_svg = false;
  config.out_dir = dir.string();
  REQUIRE(run_quiet(config) == 0);
  REQUIRE(fs::exists(dir / "roc.csv"));
  REQUIRE_FALSE(fs::exists(dir / "report.json"));
  REQUIRE_FALSE(fs::exists(dir / "roc.svg"));
}

TEST_CASE("cli binary round trip", "[cli]") {
  const fs::path dir = scratch_dir("binary");
  fs::create_directories(dir);
  const std::string base = std::string(IMBEVAL_CLI_PATH);

  const std::string ok_cmd = base + " --input " + fixture_path().string() +
                             " --curves roc,pr --p-real 0.01 --out-dir " +
                             (dir / "out").string() + " > /dev/null 2>&1";
  const int ok = std::system(ok_cmd.c_str());
  REQUIRE(WIFEXITED(ok));
  REQUIRE(WEXITSTATUS(ok) == 0);
  REQUIRE(fs::exists(dir / "out" / "pr.csv"));

  // a p_test override plus custom sweep reaches the adjusted-precision curve
  const std::string adj_cmd =
      base + " --input " + fixture_path().string() +
      " --curves adjprec --threshold 0.5 --p-test 0.3 --sweep 1e-3:0.3:10" +
      " --out-dir " + (dir / "adj").string() + " > /dev/null 2>&1";
  const int adj = std::system(adj_cmd.c_str());
  REQUIRE(WIFEXITED(adj));
  REQUIRE(WEXITSTATUS(adj) == 0);
  const std::string adj_csv = slurp(dir / "adj" / "adjprec.csv");
  REQUIRE(adj_csv.rfind("threshold,x,y,ir\n0.5,0.001,", 0) == 0);
  REQUIRE_THAT(adj_csv, ContainsSubstring("\n0.5,0.3,"));

  const std::string bad_cmd =
      base + " --curves bogus > /dev/null 2>&1";
  const int bad = std::system(bad_cmd.c_str());
  REQUIRE(WIFEXITED(bad));
  REQUIRE(WEXITSTATUS(bad) == 1);

  const std::string help_cmd = base + " --help > /dev/null 2>&1";
  const int help = std::system(help_cmd.c_str());
  REQUIRE(WIFEXITED(help));
  REQUIRE(WEXITSTATUS(help) == 0);
}
