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

// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line; the
// process exits non-zero if any criterion fails.

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "imbeval/imbeval.hpp"
#include "oracles.hpp"

namespace {

namespace fs = std::filesystem;

int failures = 0;

void report(int id, const std::string& label, bool ok,
            const std::string& detail = "") {
  std::printf("%s  criterion %2d: %s%s\n", ok ? "PASS" : "FAIL", id,
              label.c_str(), detail.empty() ? "" : ("  [" + detail + "]").c_str());
  if (!ok) ++failures;
}

std::string slurp(const fs::path& path) {
  std::ifstream file(path, std::ios::binary);
  std::ostringstream out;
  out << file.rdbuf();
  return out.str();
}

// 1. worked operating-point example: tpr=1, fpr=0.01, ir=0.01 -> 0.5
void criterion_1() {
  const double got = imbeval::precision_from_roc_point(
      1.0, 0.01, imbeval::ImbalanceRatio(0.01));
  report(1, "precision_from_roc_point(1.0, 0.01, ir=0.01) == 0.5",
         std::abs(got - 0.5) <= 1e-12, "got " + imbeval::format_double(got));
}

// 2. adjusted precision reduces to precision at equal priors (1e-15)
void criterion_2() {
  std::mt19937_64 rng(20260811);
  std::uniform_real_distribution<double> prior(0.001, 0.999);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    imbeval::ConfusionMatrix cm = oracles::random_matrix(rng, 0, 1000000);
    if (cm.tp + cm.fp == 0.0) cm.tp = 1.0;
    const double p = prior(rng);
    const double gap =
        std::abs(imbeval::adjusted_precision(cm, imbeval::PriorSpec(p, p)) -
                 imbeval::precision(cm));
    worst = std::max(worst, gap);
  }
  report(2, "adjusted_precision(cm, p, p) == precision(cm), 1000 draws",
         worst <= 1e-15, "max gap " + imbeval::format_double(worst));
}

// 3. adjusted precision agrees with the ROC-point identity (1e-12)
void criterion_3() {
  std::mt19937_64 rng(30303);
  std::uniform_real_distribution<double> log_prior(-6.0, -0.005);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const imbeval::ConfusionMatrix cm = oracles::random_matrix(rng, 1, 1000000);
    const double p_test = (cm.tp + cm.fn) / cm.total();
    const double p_real = std::pow(10.0, log_prior(rng));
    const double adjusted =
        imbeval::adjusted_precision(cm, imbeval::PriorSpec(p_test, p_real));
    const double from_point = imbeval::precision_from_roc_point(
        imbeval::tpr(cm), imbeval::fpr(cm),
        imbeval::ImbalanceRatio::from_prior(p_real));
    worst = std::max(worst, std::abs(adjusted - from_point));
  }
  report(3, "adjusted_precision matches precision_from_roc_point, 1000 draws",
         worst <= 1e-12, "max gap " + imbeval::format_double(worst));
}

// 4. trapezoidal AUC equals the pair-counting statistic (1e-12)
void criterion_4() {
  std::mt19937_64 rng(444444);
  std::uniform_int_distribution<std::size_t> count(1, 100);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const int levels = i % 2 == 0 ? 8 : 0;  // half the draws have heavy ties
    const imbeval::ScoredDataset ds =
        oracles::random_dataset(rng, count(rng), count(rng), levels);
    const double trapezoid = imbeval::auc(imbeval::roc_curve(ds));
    worst = std::max(worst,
                     std::abs(trapezoid - oracles::pair_count_auc(ds)));
  }
  report(4, "auc equals pair counting with half-weighted ties, 200 datasets",
         worst <= 1e-12, "max gap " + imbeval::format_double(worst));
}

// 5. partial AUC: additivity, full-span identity, diagonal analytic value
void criterion_5() {
  std::mt19937_64 rng(55555);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  bool ok = true;
  std::string detail;

  double worst_add = 0.0;
  bool full_span_exact = true;
  for (int i = 0; i < 50; ++i) {
    const imbeval::ScoredDataset ds =
        oracles::random_dataset(rng, 3 + i % 10, 5 + i % 17, 7);
    const imbeval::Curve roc = imbeval::roc_curve(ds);
    double cuts[3] = {uniform(rng), uniform(rng), uniform(rng)};
    std::sort(cuts, cuts + 3);
    if (cuts[0] < cuts[1] && cuts[1] < cuts[2]) {
      const double split =
          imbeval::partial_auc(roc,
                               imbeval::RegionOfInterest(cuts[0], cuts[1])) +
          imbeval::partial_auc(roc,
                               imbeval::RegionOfInterest(cuts[1], cuts[2]));
      const double whole = imbeval::partial_auc(
          roc, imbeval::RegionOfInterest(cuts[0], cuts[2]));
      worst_add = std::max(worst_add, std::abs(split - whole));
    }
    if (imbeval::partial_auc(roc, imbeval::RegionOfInterest(0.0, 1.0)) !=
        imbeval::auc(roc)) {
      full_span_exact = false;
    }
  }
  if (worst_add > 1e-12) {
    ok = false;
    detail += "additivity gap " + imbeval::format_double(worst_add);
  }
  if (!full_span_exact) {
    ok = false;
    detail += (detail.empty() ? "" : "; ");
    detail += "partial_auc([0,1]) != auc";
  }

  const imbeval::Curve diagonal = imbeval::roc_curve(
      imbeval::ScoredDataset({{0.5, imbeval::Label::positive},
                              {0.5, imbeval::Label::negative}}));
  double worst_diag = 0.0;
  for (int i = 0; i < 50; ++i) {
    double a = uniform(rng);
    double b = uniform(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    const double got =
        imbeval::partial_auc(diagonal, imbeval::RegionOfInterest(a, b));
    worst_diag = std::max(worst_diag, std::abs(got - (b * b - a * a) / 2.0));
  }
  if (worst_diag > 1e-12) {
    ok = false;
    detail += (detail.empty() ? "" : "; ");
    detail += "diagonal gap " + imbeval::format_double(worst_diag);
  }
  report(5, "partial-AUC additivity, full-span identity, diagonal analytics",
         ok, detail);
}

// 6. replicating every negative m times leaves the ROC vertex set bit-exact
void criterion_6() {
  std::mt19937_64 rng(666666);
  std::uniform_int_distribution<std::size_t> count(1, 40);
  bool ok = true;
  for (int i = 0; i < 100 && ok; ++i) {
    const imbeval::ScoredDataset ds =
        oracles::random_dataset(rng, count(rng), count(rng), 6);
    const imbeval::Curve base = imbeval::roc_curve(ds);
    for (int m : {2, 3, 5}) {
      std::vector<imbeval::LabeledScore> replicated;
      for (const auto& s : ds.samples()) {
        const int copies = s.label == imbeval::Label::negative ? m : 1;
        for (int c = 0; c < copies; ++c) replicated.push_back(s);
      }
      const imbeval::Curve dup =
          imbeval::roc_curve(imbeval::ScoredDataset(std::move(replicated)));
      if (dup.points.size() != base.points.size()) {
        ok = false;
        break;
      }
      for (std::size_t k = 0; k < base.points.size(); ++k) {
        const bool same_threshold =
            base.points[k].threshold == dup.points[k].threshold ||
            (std::isinf(base.points[k].threshold) &&
             std::isinf(dup.points[k].threshold));
        if (!same_threshold || base.points[k].x != dup.points[k].x ||
            base.points[k].y != dup.points[k].y) {
          ok = false;
          break;
        }
      }
    }
  }
  report(6, "ROC is bit-identical under negative replication (m=2,3,5)", ok);
}

// 7. full-AUC winner flips inside the ROI and the audit reports it
void criterion_7() {
  const auto [steady, front_loaded] = oracles::make_inversion_pair();
  const imbeval::Curve curve_a = imbeval::roc_curve(steady);
  const imbeval::Curve curve_b = imbeval::roc_curve(front_loaded);
  const imbeval::RegionOfInterest roi(0.0, 1e-3);
  const auto cmp = imbeval::compare_roi(curve_a, curve_b, roi);

  const bool pair_check =
      std::abs(cmp.auc_a - oracles::pair_count_auc(steady)) <= 1e-12 &&
      std::abs(cmp.auc_b - oracles::pair_count_auc(front_loaded)) <= 1e-12;

  const auto findings = imbeval::audit_auc(curve_a, curve_b, roi);
  const bool flagged =
      std::any_of(findings.begin(), findings.end(), [](const auto& f) {
        return f.rule == imbeval::AuditRule::auc_roi_inversion;
      });

  const bool ok = cmp.auc_a > cmp.auc_b && cmp.pauc_b > cmp.pauc_a &&
                  cmp.inversion && flagged && pair_check;
  report(7, "constructed pair inverts between full AUC and ROI AUC", ok,
         "auc " + imbeval::format_double(cmp.auc_a) + " vs " +
             imbeval::format_double(cmp.auc_b) + ", pauc " +
             imbeval::format_double(cmp.pauc_a) + " vs " +
             imbeval::format_double(cmp.pauc_b));
}

// 8. accuracy 0.97 at ir 0.01 is below the trivial baseline
void criterion_8() {
  const auto findings =
      imbeval::audit_accuracy(0.97, imbeval::ImbalanceRatio(0.01));
  const bool ok =
      findings.size() == 1 &&
      findings[0].rule == imbeval::AuditRule::acc_below_trivial &&
      findings[0].severity == imbeval::Severity::error &&
      imbeval::trivial_accuracy(imbeval::ImbalanceRatio(0.01)) > 0.97;
  report(8, "accuracy 0.97 at ir=0.01 triggers ACC_BELOW_TRIVIAL", ok);
}

// 9. the adjusted-precision sweep is strictly increasing when tp, fp > 0
void criterion_9() {
  std::mt19937_64 rng(999999);
  std::uniform_real_distribution<double> prior(0.01, 0.99);
  bool ok = true;
  for (int i = 0; i < 1000 && ok; ++i) {
    imbeval::ConfusionMatrix cm = oracles::random_matrix(rng, 1, 1000000);
    const auto curve = imbeval::adjusted_precision_curve(
        cm, imbeval::PriorSweep{1e-4, 0.5, 20}, prior(rng));
    for (std::size_t k = 0; k + 1 < curve.points.size(); ++k) {
      if (!(curve.points[k].y < curve.points[k + 1].y)) {
        ok = false;
        break;
      }
    }
  }
  report(9, "adjusted-precision curve strictly increases, 1000 matrices", ok);
}

// 10. golden CLI run: deterministic artifacts that match direct library calls
void criterion_10() {
  const fs::path fixture =
      fs::path(IMBEVAL_TEST_DATA_DIR) / "fixture_scores.csv";
  const fs::path dir = fs::temp_directory_path() / "imbeval_acceptance";
  fs::remove_all(dir);

  imbeval::RunConfig config;
  config.input_path = fixture.string();
  config.curves = {imbeval::CurveKind::roc, imbeval::CurveKind::det,
                   imbeval::CurveKind::pr,
                   imbeval::CurveKind::adjusted_precision};
  config.p_real = 0.01;
  config.threshold = 0.6;
  config.roi = std::make_pair(0.0, 0.1);
  config.audit = true;
  std::ostringstream out;
  std::ostringstream err;
  config.out_dir = (dir / "a").string();
  const int code_a = imbeval::run(config, out, err);
  config.out_dir = (dir / "b").string();
  const int code_b = imbeval::run(config, out, err);

  bool ok = code_a == code_b;
  std::string detail;
  const char* names[] = {"roc.csv", "det.csv", "pr.csv", "adjprec.csv",
                         "report.json"};
  for (const char* name : names) {
    if (!fs::exists(dir / "a" / name) ||
        slurp(dir / "a" / name) != slurp(dir / "b" / name)) {
      ok = false;
      detail = std::string("mismatch in ") + name;
    }
  }

  // report.json numbers must equal direct library calls bit for bit
  if (ok) {
    const auto report_json =
        nlohmann::json::parse(slurp(dir / "a" / "report.json"));
    const imbeval::ScoredDataset ds = imbeval::load_scores(fixture);
    const imbeval::Curve roc = imbeval::roc_curve(ds);
    const imbeval::RegionOfInterest roi(0.0, 0.1);
    const double auc_direct = imbeval::auc(roc);
    const double pauc_direct = imbeval::partial_auc(roc, roi, false);
    const double pauc_norm_direct = imbeval::partial_auc(roc, roi, true);
    if (report_json.at("metrics").at("auc").get<double>() != auc_direct ||
        report_json.at("metrics").at("pauc_raw").get<double>() !=
            pauc_direct ||
        report_json.at("metrics").at("pauc_normalized").get<double>() !=
            pauc_norm_direct ||
        report_json.at("inputs").at("p_test").get<double>() != ds.p_test() ||
        report_json.at("inputs").at("pos_count").get<std::size_t>() !=
            ds.pos_count()) {
      ok = false;
      detail = "report.json disagrees with direct library calls";
    }
  }

  // the audit invocation from criterion 8 exits 2 through the real binary
  const std::string audit_cmd =
      std::string(IMBEVAL_CLI_PATH) + " --audit --accuracy 0.97 --ir 0.01" +
      " --out-dir " + (dir / "audit").string() + " > /dev/null 2>&1";
  const int raw = std::system(audit_cmd.c_str());
  if (!WIFEXITED(raw) || WEXITSTATUS(raw) != 2) {
    ok = false;
    detail = (detail.empty() ? "" : detail + "; ") + std::string("audit exit code ") +
             std::to_string(WIFEXITED(raw) ? WEXITSTATUS(raw) : -1) + " != 2";
  }

  report(10, "CLI golden files are byte-stable and match the library", ok,
         detail);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (failures == 0) {
    std::printf("all 10 acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", failures);
  return 1;
}
