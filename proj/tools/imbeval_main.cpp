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

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "imbeval/imbeval.hpp"

namespace {

bool split_fields(const std::string& text, char sep,
                  std::vector<std::string>& out) {
  out.clear();
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(text.substr(start));
      return !out.back().empty();
    }
    out.push_back(text.substr(start, pos - start));
    if (out.back().empty()) return false;
    start = pos + 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "imbeval: evaluate binary classifiers under class imbalance\n"
      "Builds ROC/DET/PR curves, prior-adjusted precision, partial AUC over\n"
      "an FPR region of interest, and audits reported metrics against the\n"
      "always-majority baseline."};

  std::string input;
  std::string positive_label = "1";
  std::optional<double> p_real;
  std::optional<double> p_test;
  std::string roi_text;
  std::vector<std::string> curve_tokens;
  std::string sweep_text;
  std::optional<double> threshold;
  std::string out_dir = ".";
  std::vector<std::string> emit_tokens;
  bool audit = false;
  std::optional<double> accuracy;
  std::optional<double> ir;
  double margin = 0.005;
  double prior_tolerance = 0.1;

  app.add_option("--input", input,
                 "input CSV with a 'score,label' header, one sample per row");
  app.add_option("--positive-label", positive_label,
                 "label token of the positive (minority) class")
      ->capture_default_str();
  app.add_option("--p-real", p_real,
                 "deployment minority prior in (0,1); precision-style output "
                 "is adjusted to it");
  app.add_option("--p-test", p_test,
                 "override of the test-set minority prior (for pre-sampled "
                 "sets); defaults to the empirical prior");
  app.add_option("--roi", roi_text,
                 "FPR region of interest MIN:MAX for partial AUC; defaults "
                 "to 0:IR when an imbalance ratio is known");
  app.add_option("--curves", curve_tokens,
                 "comma list of curves to emit: roc,det,pr,adjprec")
      ->delimiter(',');
  app.add_option("--sweep", sweep_text,
                 "adjusted-precision prior sweep MIN:MAX:POINTS_PER_DECADE "
                 "(default 1e-4:0.5:50)");
  app.add_option("--threshold", threshold,
                 "decision threshold (score >= threshold predicts positive); "
                 "required for adjprec");
  app.add_option("--out-dir", out_dir, "output directory")
      ->capture_default_str();
  app.add_option("--emit", emit_tokens,
                 "comma list of output formats: csv,json,svg (default "
                 "csv,json)")
      ->delimiter(',');
  app.add_flag("--audit", audit,
               "run evaluation-practice checks and exit 2 on any "
               "error-severity finding");
  app.add_option("--accuracy", accuracy,
                 "reported accuracy to audit against the always-majority "
                 "baseline (needs --ir or --p-real)");
  app.add_option("--ir", ir, "deployment imbalance ratio P/N (e.g. 0.01)");
  app.add_option("--margin", margin,
                 "accuracy margin above the trivial baseline that still "
                 "warns")
      ->capture_default_str();
  app.add_option("--prior-tolerance", prior_tolerance,
                 "relative test-vs-deployment prior gap that triggers the "
                 "prior-mismatch warning")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  imbeval::RunConfig config;
  config.input_path = input;
  config.positive_label = positive_label;
  config.p_real = p_real;
  config.p_test_override = p_test;
  config.threshold = threshold;
  config.out_dir = out_dir;
  config.audit = audit;
  config.reported_accuracy = accuracy;
  config.ir = ir;
  config.margin = margin;
  config.prior_tolerance = prior_tolerance;

  for (const std::string& token : curve_tokens) {
    if (token == "roc") {
      config.curves.push_back(imbeval::CurveKind::roc);
    } else if (token == "det") {
      config.curves.push_back(imbeval::CurveKind::det);
    } else if (token == "pr") {
      config.curves.push_back(imbeval::CurveKind::pr);
    } else if (token == "adjprec") {
      config.curves.push_back(imbeval::CurveKind::adjusted_precision);
    } else {
      std::cerr << "imbeval: unknown curve '" << token
                << "' (expected roc,det,pr,adjprec)\n";
      return 1;
    }
  }

  if (!roi_text.empty()) {
    std::vector<std::string> fields;
    double lo = 0.0;
    double hi = 0.0;
    if (!split_fields(roi_text, ':', fields) || fields.size() != 2 ||
        !imbeval::parse_double(fields[0], lo) ||
        !imbeval::parse_double(fields[1], hi)) {
      std::cerr << "imbeval: --roi expects MIN:MAX, got '" << roi_text
                << "'\n";
      return 1;
    }
    config.roi = std::make_pair(lo, hi);
  }

  if (!sweep_text.empty()) {
    std::vector<std::string> fields;
    double lo = 0.0;
    double hi = 0.0;
    double ppd = 0.0;
    if (!split_fields(sweep_text, ':', fields) || fields.size() != 3 ||
        !imbeval::parse_double(fields[0], lo) ||
        !imbeval::parse_double(fields[1], hi) ||
        !imbeval::parse_double(fields[2], ppd) || ppd < 1.0 || ppd > 1e6 ||
        ppd != static_cast<double>(static_cast<int>(ppd))) {
      std::cerr << "imbeval: --sweep expects MIN:MAX:POINTS_PER_DECADE, got '"
                << sweep_text << "'\n";
      return 1;
    }
    config.sweep = imbeval::PriorSweep{lo, hi, static_cast<int>(ppd)};
  }

  if (!emit_tokens.empty()) {
    config.emit_csv = false;
    config.emit_json = false;
    config.emit_svg = false;
    for (const std::string& token : emit_tokens) {
      if (token == "csv") {
        config.emit_csv = true;
      } else if (token == "json") {
        config.emit_json = true;
      } else if (token == "svg") {
        config.emit_svg = true;
      } else {
        std::cerr << "imbeval: unknown emit format '" << token
                  << "' (expected csv,json,svg)\n";
        return 1;
      }
    }
  }

  return imbeval::run(config);
}
