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

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "imbeval/auc.hpp"
#include "imbeval/core.hpp"
#include "imbeval/curve.hpp"
#include "imbeval/metrics.hpp"
#include "imbeval/prior_shift.hpp"

namespace imbeval {

enum class Severity { error = 0, warning = 1, info = 2 };

enum class AuditRule {
  acc_below_trivial = 0,
  acc_near_trivial,
  prior_mismatch,
  auc_roi_inversion,
  auc_default_roi,
  missing_ir_for_precision,
  ir_gt_one,
};

inline const char* severity_name(Severity severity) {
  switch (severity) {
    case Severity::error:
      return "error";
    case Severity::warning:
      return "warning";
    case Severity::info:
      return "info";
  }
  return "unknown";
}

inline const char* audit_rule_name(AuditRule rule) {
  switch (rule) {
    case AuditRule::acc_below_trivial:
      return "ACC_BELOW_TRIVIAL";
    case AuditRule::acc_near_trivial:
      return "ACC_NEAR_TRIVIAL";
    case AuditRule::prior_mismatch:
      return "PRIOR_MISMATCH";
    case AuditRule::auc_roi_inversion:
      return "AUC_ROI_INVERSION";
    case AuditRule::auc_default_roi:
      return "AUC_DEFAULT_ROI";
    case AuditRule::missing_ir_for_precision:
      return "MISSING_IR_FOR_PRECISION";
    case AuditRule::ir_gt_one:
      return "IR_GT_ONE";
  }
  return "UNKNOWN";
}

/// One machine-checkable finding. evidence carries every numeric input needed
/// to recompute the triggering inequality.
struct AuditFinding {
  AuditRule rule = AuditRule::missing_ir_for_precision;
  Severity severity = Severity::info;
  std::string message;
  std::map<std::string, double> evidence;
};

namespace detail {

// Compact value rendering for messages; exact values live in evidence.
inline std::string msg_num(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return buffer;
}

}  // namespace detail

/// Accuracy of the always-majority predictor, 1/(1+ir). Any useful method
/// must beat this floor.
inline double trivial_accuracy(const ImbalanceRatio& ir) {
  return 1.0 / (1.0 + ir.value());
}

/// Flags reported accuracy that loses to the always-majority predictor
/// (error) or beats it by no more than margin (warning).
inline std::vector<AuditFinding> audit_accuracy(double reported_accuracy,
                                                const ImbalanceRatio& ir,
                                                double margin = 0.005) {
  if (!(reported_accuracy >= 0.0) || !(reported_accuracy <= 1.0)) {
    throw std::invalid_argument("reported accuracy must lie in [0,1]");
  }
  if (!(margin >= 0.0)) {
    throw std::invalid_argument("margin must be >= 0");
  }
  std::vector<AuditFinding> findings;
  const double baseline = trivial_accuracy(ir);
  if (reported_accuracy < baseline) {
    AuditFinding f;
    f.rule = AuditRule::acc_below_trivial;
    f.severity = Severity::error;
    f.message = "reported accuracy " + detail::msg_num(reported_accuracy) +
                " is below the always-majority baseline " +
                detail::msg_num(baseline) + " at ir=" +
                detail::msg_num(ir.value());
    f.evidence = {{"reported_accuracy", reported_accuracy},
                  {"trivial_accuracy", baseline},
                  {"ir", ir.value()}};
    findings.push_back(std::move(f));
  } else if (reported_accuracy - baseline <= margin) {
    AuditFinding f;
    f.rule = AuditRule::acc_near_trivial;
    f.severity = Severity::warning;
    f.message = "reported accuracy " + detail::msg_num(reported_accuracy) +
                " is within " + detail::msg_num(margin) +
                " of the always-majority baseline " +
                detail::msg_num(baseline);
    f.evidence = {{"reported_accuracy", reported_accuracy},
                  {"trivial_accuracy", baseline},
                  {"margin", margin},
                  {"ir", ir.value()}};
    findings.push_back(std::move(f));
  }
  return findings;
}

/// Flags a relative gap between the test prior and the deployment prior
/// larger than tolerance. Escalates to error when p_test > 2*p_real, the
/// direction in which test-set precision overstates deployment precision.
/// With a confusion matrix supplied, both precisions enter the evidence.
inline std::vector<AuditFinding> audit_precision_prior(
    const PriorSpec& priors, double tolerance = 0.1,
    const ConfusionMatrix* cm = nullptr) {
  if (!(tolerance >= 0.0)) {
    throw std::invalid_argument("prior tolerance must be >= 0");
  }
  std::vector<AuditFinding> findings;
  const double relative_gap =
      std::abs(priors.p_test() - priors.p_real()) / priors.p_real();
  if (relative_gap > tolerance) {
    const bool optimistic = priors.p_test() > 2.0 * priors.p_real();
    AuditFinding f;
    f.rule = AuditRule::prior_mismatch;
    f.severity = optimistic ? Severity::error : Severity::warning;
    f.message = "test prior " + detail::msg_num(priors.p_test()) +
                " differs from deployment prior " +
                detail::msg_num(priors.p_real()) + " by " +
                detail::msg_num(relative_gap * 100.0) + "% relative";
    if (optimistic) {
      f.message +=
          "; precision measured at the test prior overstates deployment "
          "precision";
    }
    f.evidence = {{"p_test", priors.p_test()},
                  {"p_real", priors.p_real()},
                  {"relative_gap", relative_gap},
                  {"tolerance", tolerance}};
    if (cm != nullptr && cm->tp + cm->fp > 0.0) {
      f.evidence["precision"] = precision(*cm);
      f.evidence["adjusted_precision"] = adjusted_precision(*cm, priors);
    }
    findings.push_back(std::move(f));
  }
  return findings;
}

namespace detail {

inline std::vector<AuditFinding> audit_auc_impl(
    const Curve& curve_a, const Curve* curve_b,
    const std::optional<RegionOfInterest>& roi,
    const std::optional<ImbalanceRatio>& ir) {
  std::vector<AuditFinding> findings;
  std::optional<RegionOfInterest> effective = roi;
  if (!effective && ir) {
    const double fpr_max = std::min(ir->value(), 1.0);
    effective = RegionOfInterest(0.0, fpr_max);
    AuditFinding f;
    f.rule = AuditRule::auc_default_roi;
    f.severity = Severity::info;
    f.message = "no ROI given; defaulting to [0, ir] = [0, " +
                msg_num(fpr_max) + "]; fraction of the FPR axis outside it: " +
                msg_num(1.0 - (fpr_max - 0.0));
    f.evidence = {{"fpr_min", 0.0},
                  {"fpr_max", fpr_max},
                  {"irrelevant_fraction", 1.0 - (fpr_max - 0.0)},
                  {"ir", ir->value()}};
    findings.push_back(std::move(f));
  }
  if (!effective) {
    AuditFinding f;
    f.rule = AuditRule::missing_ir_for_precision;
    f.severity = Severity::info;
    f.message =
        "no ROI or imbalance ratio given; a full-range AUC cannot be tied to "
        "any deployable operating region";
    f.evidence = {{"auc_a", auc(curve_a)}};
    if (curve_b != nullptr) f.evidence["auc_b"] = auc(*curve_b);
    findings.push_back(std::move(f));
    return findings;
  }
  if (curve_b != nullptr) {
    const ComparisonResult cmp = compare_roi(curve_a, *curve_b, *effective);
    if (cmp.inversion) {
      AuditFinding f;
      f.rule = AuditRule::auc_roi_inversion;
      f.severity = Severity::warning;
      f.message = "full-AUC ordering flips inside the ROI [" +
                  msg_num(effective->fpr_min()) + ", " +
                  msg_num(effective->fpr_max()) + "]: auc " +
                  msg_num(cmp.auc_a) + " vs " + msg_num(cmp.auc_b) +
                  ", pauc " + msg_num(cmp.pauc_a) + " vs " +
                  msg_num(cmp.pauc_b);
      f.evidence = {{"auc_a", cmp.auc_a},     {"auc_b", cmp.auc_b},
                    {"pauc_a", cmp.pauc_a},   {"pauc_b", cmp.pauc_b},
                    {"fpr_min", effective->fpr_min()},
                    {"fpr_max", effective->fpr_max()}};
      findings.push_back(std::move(f));
    }
  }
  return findings;
}

}  // namespace detail

/// Compares two ROC curves inside the ROI (defaulted to [0, ir] when only an
/// imbalance ratio is given) and flags a full-AUC vs ROI-AUC ordering flip.
/// Without both an ROI and an ir, reports that full AUC alone is
/// uninterpretable.
inline std::vector<AuditFinding> audit_auc(
    const Curve& curve_a, const Curve& curve_b,
    std::optional<RegionOfInterest> roi = std::nullopt,
    std::optional<ImbalanceRatio> ir = std::nullopt) {
  return detail::audit_auc_impl(curve_a, &curve_b, roi, ir);
}

/// Single-curve form: ROI defaulting and the uninterpretable-AUC info rule,
/// with no inversion check.
inline std::vector<AuditFinding> audit_auc(
    const Curve& curve, std::optional<RegionOfInterest> roi = std::nullopt,
    std::optional<ImbalanceRatio> ir = std::nullopt) {
  return detail::audit_auc_impl(curve, nullptr, roi, ir);
}

/// An IR above 1 means the "minority" class outnumbers the majority, which
/// usually signals swapped labels.
inline std::vector<AuditFinding> audit_imbalance_ratio(
    const ImbalanceRatio& ir) {
  std::vector<AuditFinding> findings;
  if (ir.value() > 1.0) {
    AuditFinding f;
    f.rule = AuditRule::ir_gt_one;
    f.severity = Severity::info;
    f.message = "imbalance ratio " + detail::msg_num(ir.value()) +
                " exceeds 1: the positive class outnumbers the negative "
                "class; verify that the positive label marks the minority";
    f.evidence = {{"ir", ir.value()}};
    findings.push_back(std::move(f));
  }
  return findings;
}

/// Echo of the audit inputs, kept alongside the findings so a report can be
/// recomputed from itself.
struct AuditInputs {
  std::optional<double> reported_accuracy;
  std::optional<double> ir;
  std::optional<double> p_test;
  std::optional<double> p_real;
  std::optional<double> margin;
  std::optional<double> prior_tolerance;
  std::optional<RegionOfInterest> roi;
  bool roi_defaulted = false;
  std::optional<std::size_t> pos_count;
  std::optional<std::size_t> neg_count;
};

struct AuditReport {
  std::vector<AuditFinding> findings;
  AuditInputs inputs;
};

/// Deterministic assembly: findings ordered by (severity, rule), stable for
/// equal keys.
inline AuditReport make_report(std::vector<AuditFinding> findings,
                               AuditInputs inputs = {}) {
  std::stable_sort(findings.begin(), findings.end(),
                   [](const AuditFinding& a, const AuditFinding& b) {
                     if (a.severity != b.severity) {
                       return static_cast<int>(a.severity) <
                              static_cast<int>(b.severity);
                     }
                     return static_cast<int>(a.rule) < static_cast<int>(b.rule);
                   });
  return AuditReport{std::move(findings), std::move(inputs)};
}

inline bool has_error(const AuditReport& report) {
  return std::any_of(
      report.findings.begin(), report.findings.end(),
      [](const AuditFinding& f) { return f.severity == Severity::error; });
}

}  // namespace imbeval
