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
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "imbeval/auc.hpp"
#include "imbeval/audit.hpp"
#include "imbeval/core.hpp"
#include "imbeval/csv.hpp"
#include "imbeval/curves.hpp"
#include "imbeval/metrics.hpp"
#include "imbeval/prior_shift.hpp"
#include "imbeval/report.hpp"
#include "imbeval/svg.hpp"

namespace imbeval {

/// One CLI invocation. At least one of curves / audit must be active.
struct RunConfig {
  std::string input_path;
  std::string positive_label = "1";
  std::optional<double> p_real;
  std::optional<double> p_test_override;
  std::optional<std::pair<double, double>> roi;
  std::vector<CurveKind> curves;
  PriorSweep sweep{};
  std::optional<double> threshold;
  std::string out_dir = ".";
  bool emit_csv = true;
  bool emit_json = true;
  bool emit_svg = false;
  bool audit = false;
  std::optional<double> reported_accuracy;
  std::optional<double> ir;
  double margin = 0.005;
  double prior_tolerance = 0.1;
};

namespace detail {

// Precision-style values never leave the tool without the prior they are
// valid for; this is the only formatter the summary uses for them.
inline std::string metric_with_prior(const std::string& name, double value,
                                     const std::string& prior_name,
                                     double prior_value) {
  return name + "=" + format_double(value) + " (" + prior_name + "=" +
         format_double(prior_value) + ")";
}

inline bool selected(const RunConfig& config, CurveKind kind) {
  return std::find(config.curves.begin(), config.curves.end(), kind) !=
         config.curves.end();
}

}  // namespace detail

/// Executes one run: ingest, curves, metrics, audit, then all file writes.
/// Nothing is written until every computation has succeeded.
/// Returns 0 on success, 1 on operational failure, 2 when the audit contains
/// an error-severity finding.
inline int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const bool wants_curves = !config.curves.empty();
    if (!wants_curves && !config.audit) {
      err << "imbeval: nothing to do: select --curves and/or --audit\n";
      return 1;
    }
    if (wants_curves && config.input_path.empty()) {
      err << "imbeval: --curves requires --input\n";
      return 1;
    }

    std::optional<ScoredDataset> dataset;
    if (!config.input_path.empty()) {
      dataset = load_scores(config.input_path, config.positive_label);
    }

    // Test prior: explicit override, else the empirical prior when the
    // dataset has both classes.
    std::optional<double> p_test = config.p_test_override;
    if (p_test && (!(*p_test > 0.0) || !(*p_test < 1.0))) {
      err << "imbeval: --p-test must lie in (0,1)\n";
      return 1;
    }
    if (!p_test && dataset && dataset->pos_count() > 0 &&
        dataset->neg_count() > 0) {
      p_test = dataset->p_test();
    }

    // Deployment imbalance ratio: --ir wins, otherwise derived from --p-real.
    std::optional<ImbalanceRatio> deploy_ir;
    if (config.ir) {
      deploy_ir = ImbalanceRatio(*config.ir);
    } else if (config.p_real) {
      deploy_ir = ImbalanceRatio::from_prior(*config.p_real);
    }

    std::optional<RegionOfInterest> explicit_roi;
    if (config.roi) {
      explicit_roi = RegionOfInterest(config.roi->first, config.roi->second);
    }
    std::optional<RegionOfInterest> roi = explicit_roi;
    bool roi_defaulted = false;
    if (!roi && deploy_ir) {
      roi = RegionOfInterest(0.0, std::min(deploy_ir->value(), 1.0));
      roi_defaulted = true;
    }

    // Curves. The ROC is also built unselected when the audit needs it, but
    // the audit silently skips it for single-class data; only an explicit
    // curve request turns a missing class into an error.
    std::optional<Curve> roc;
    std::optional<Curve> det;
    std::optional<Curve> pr;
    std::optional<Curve> pr_adjusted;
    std::optional<Curve> adjprec;
    const bool audit_can_roc = config.audit && dataset.has_value() &&
                               dataset->pos_count() > 0 &&
                               dataset->neg_count() > 0;
    if (detail::selected(config, CurveKind::roc) || audit_can_roc) {
      roc = roc_curve(*dataset);
    }
    if (detail::selected(config, CurveKind::det)) det = det_curve(*dataset);
    if (detail::selected(config, CurveKind::pr)) {
      pr = pr_curve(*dataset);
      if (config.p_real) {
        pr_adjusted = pr_curve_at_prior(*dataset, *config.p_real);
      }
    }
    std::optional<ConfusionMatrix> cm;
    if (config.threshold && dataset) {
      cm = confusion_at_threshold(*dataset, *config.threshold);
    }
    if (detail::selected(config, CurveKind::adjusted_precision)) {
      if (!cm) {
        err << "imbeval: the adjprec curve requires --threshold (the "
               "operating point whose precision is swept)\n";
        return 1;
      }
      if (!p_test) {
        err << "imbeval: the adjprec curve requires a test prior (--p-test "
               "or an input with both classes)\n";
        return 1;
      }
      adjprec = adjusted_precision_curve(*cm, config.sweep, *p_test);
      for (CurvePoint& p : adjprec->points) p.threshold = *config.threshold;
    }

    ReportMetrics metrics;
    if (roc) {
      metrics.auc = auc(*roc);
      if (roi) {
        metrics.pauc_raw = partial_auc(*roc, *roi, false);
        metrics.pauc_normalized = partial_auc(*roc, *roi, true);
      }
    }

    // Audit rules.
    std::vector<AuditFinding> findings;
    if (config.audit) {
      if (config.reported_accuracy) {
        if (!deploy_ir) {
          err << "imbeval: auditing --accuracy requires --ir or --p-real\n";
          return 1;
        }
        auto fs = audit_accuracy(*config.reported_accuracy, *deploy_ir,
                                 config.margin);
        findings.insert(findings.end(), fs.begin(), fs.end());
      }
      if (deploy_ir) {
        auto fs = audit_imbalance_ratio(*deploy_ir);
        findings.insert(findings.end(), fs.begin(), fs.end());
      }
      if (p_test && config.p_real) {
        const PriorSpec priors(*p_test, *config.p_real);
        auto fs = audit_precision_prior(priors, config.prior_tolerance,
                                        cm ? &*cm : nullptr);
        findings.insert(findings.end(), fs.begin(), fs.end());
      }
      if (roc) {
        auto fs = audit_auc(*roc, explicit_roi, deploy_ir);
        findings.insert(findings.end(), fs.begin(), fs.end());
      }
    }
    AuditInputs audit_inputs;
    audit_inputs.reported_accuracy = config.reported_accuracy;
    if (deploy_ir) audit_inputs.ir = deploy_ir->value();
    audit_inputs.p_test = p_test;
    audit_inputs.p_real = config.p_real;
    audit_inputs.margin = config.margin;
    audit_inputs.prior_tolerance = config.prior_tolerance;
    audit_inputs.roi = roi;
    audit_inputs.roi_defaulted = roi_defaulted;
    if (dataset) {
      audit_inputs.pos_count = dataset->pos_count();
      audit_inputs.neg_count = dataset->neg_count();
    }
    const AuditReport audit_report =
        make_report(std::move(findings), audit_inputs);

    // Assemble every output in memory before the first write.
    std::vector<std::pair<std::string, std::string>> files;
    std::vector<std::pair<std::string, std::string>> manifest;
    const auto add_curve = [&](const Curve& curve, const Curve* companion) {
      const std::string kind = curve_kind_name(curve.kind);
      if (config.emit_csv) {
        std::ostringstream csv;
        write_curve_csv(csv, curve, companion);
        files.emplace_back(kind + ".csv", csv.str());
        manifest.emplace_back(kind, kind + ".csv");
      }
      if (config.emit_svg) {
        SvgOptions svg_options;
        svg_options.log_x =
            curve.kind == CurveKind::adjusted_precision ||
            (curve.kind == CurveKind::roc && roi && roi->fpr_max() < 0.01);
        std::ostringstream svg;
        write_curve_svg(svg, curve, svg_options);
        files.emplace_back(kind + ".svg", svg.str());
      }
    };
    if (roc && detail::selected(config, CurveKind::roc)) {
      add_curve(*roc, nullptr);
    }
    if (det) add_curve(*det, nullptr);
    if (pr) add_curve(*pr, pr_adjusted ? &*pr_adjusted : nullptr);
    if (adjprec) add_curve(*adjprec, nullptr);

    if (config.emit_json) {
      ReportInputs inputs;
      if (!config.input_path.empty()) inputs.input_path = config.input_path;
      inputs.positive_label = config.positive_label;
      if (dataset) {
        inputs.pos_count = dataset->pos_count();
        inputs.neg_count = dataset->neg_count();
      }
      inputs.p_test = p_test;
      inputs.p_real = config.p_real;
      if (deploy_ir) inputs.ir = deploy_ir->value();
      inputs.threshold = config.threshold;
      inputs.reported_accuracy = config.reported_accuracy;
      inputs.roi = roi;
      inputs.roi_defaulted = roi_defaulted;
      const nlohmann::ordered_json report =
          build_report(inputs, metrics, manifest, audit_report);
      files.emplace_back("report.json", report.dump(2) + "\n");
    }

    const std::filesystem::path out_dir(config.out_dir);
    std::filesystem::create_directories(out_dir);
    for (const auto& [name, content] : files) {
      std::ofstream file(out_dir / name, std::ios::binary);
      if (!file) {
        err << "imbeval: cannot write " << (out_dir / name).string() << "\n";
        return 1;
      }
      file << content;
    }

    // Summary.
    if (dataset) {
      out << "samples=" << dataset->size() << " pos=" << dataset->pos_count()
          << " neg=" << dataset->neg_count();
      if (p_test) out << " p_test=" << format_double(*p_test);
      out << "\n";
    }
    if (metrics.auc) out << "auc=" << format_double(*metrics.auc) << "\n";
    if (metrics.pauc_raw && roi) {
      out << "pauc[" << format_double(roi->fpr_min()) << ","
          << format_double(roi->fpr_max()) << "]"
          << (roi_defaulted ? " (defaulted from ir)" : "")
          << " raw=" << format_double(*metrics.pauc_raw)
          << " normalized=" << format_double(*metrics.pauc_normalized)
          << "\n";
    }
    if (cm && p_test) {
      out << "threshold=" << format_double(*config.threshold) << " "
          << detail::metric_with_prior("precision", precision(*cm), "p_test",
                                       *p_test)
          << " recall=" << format_double(recall(*cm)) << "\n";
      if (config.p_real) {
        const PriorSpec priors(*p_test, *config.p_real);
        out << "threshold=" << format_double(*config.threshold) << " "
            << detail::metric_with_prior("adjusted_precision",
                                         adjusted_precision(*cm, priors),
                                         "p_real", *config.p_real)
            << "\n";
      }
    }
    if (config.audit) {
      std::size_t errors = 0;
      std::size_t warnings = 0;
      std::size_t infos = 0;
      for (const AuditFinding& f : audit_report.findings) {
        if (f.severity == Severity::error) ++errors;
        if (f.severity == Severity::warning) ++warnings;
        if (f.severity == Severity::info) ++infos;
      }
      out << "audit findings: error=" << errors << " warning=" << warnings
          << " info=" << infos << "\n";
    }
    out << "wrote";
    for (const auto& [name, content] : files) out << ' ' << name;
    out << " -> " << out_dir.string() << "\n";

    return has_error(audit_report) ? 2 : 0;
  } catch (const std::exception& e) {
    err << "imbeval: " << e.what() << "\n";
    return 1;
  }
}

inline int run(const RunConfig& config) {
  return run(config, std::cout, std::cerr);
}

}  // namespace imbeval
