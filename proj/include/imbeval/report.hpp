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

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "imbeval/auc.hpp"
#include "imbeval/audit.hpp"

namespace imbeval {

/// Inputs echoed into report.json. Absent optionals are omitted, never
/// nulled, so the report lists exactly what the run used.
struct ReportInputs {
  std::optional<std::string> input_path;
  std::string positive_label = "1";
  std::optional<std::size_t> pos_count;
  std::optional<std::size_t> neg_count;
  std::optional<double> p_test;
  std::optional<double> p_real;
  std::optional<double> ir;
  std::optional<double> threshold;
  std::optional<double> reported_accuracy;
  std::optional<RegionOfInterest> roi;
  bool roi_defaulted = false;
};

/// Threshold-free summary metrics.
struct ReportMetrics {
  std::optional<double> auc;
  std::optional<double> pauc_raw;
  std::optional<double> pauc_normalized;
};

/// report.json, schema_version 1: `inputs`, `metrics`, `curves` (file
/// manifest) and `audit` (ordered findings). Numbers serialize in shortest
/// round-trip form.
inline nlohmann::ordered_json build_report(
    const ReportInputs& inputs, const ReportMetrics& metrics,
    const std::vector<std::pair<std::string, std::string>>& curve_files,
    const AuditReport& audit) {
  nlohmann::ordered_json root;
  root["schema_version"] = 1;

  nlohmann::ordered_json in = nlohmann::ordered_json::object();
  if (inputs.input_path) in["input_path"] = *inputs.input_path;
  in["positive_label"] = inputs.positive_label;
  if (inputs.pos_count) in["pos_count"] = *inputs.pos_count;
  if (inputs.neg_count) in["neg_count"] = *inputs.neg_count;
  if (inputs.p_test) in["p_test"] = *inputs.p_test;
  if (inputs.p_real) in["p_real"] = *inputs.p_real;
  if (inputs.ir) in["ir"] = *inputs.ir;
  if (inputs.threshold) in["threshold"] = *inputs.threshold;
  if (inputs.reported_accuracy) {
    in["reported_accuracy"] = *inputs.reported_accuracy;
  }
  if (inputs.roi) {
    nlohmann::ordered_json roi = nlohmann::ordered_json::object();
    roi["fpr_min"] = inputs.roi->fpr_min();
    roi["fpr_max"] = inputs.roi->fpr_max();
    roi["defaulted"] = inputs.roi_defaulted;
    in["roi"] = std::move(roi);
  }
  root["inputs"] = std::move(in);

  nlohmann::ordered_json met = nlohmann::ordered_json::object();
  if (metrics.auc) met["auc"] = *metrics.auc;
  if (metrics.pauc_raw) met["pauc_raw"] = *metrics.pauc_raw;
  if (metrics.pauc_normalized) {
    met["pauc_normalized"] = *metrics.pauc_normalized;
  }
  root["metrics"] = std::move(met);

  nlohmann::ordered_json curves = nlohmann::ordered_json::object();
  for (const auto& [kind, file] : curve_files) curves[kind] = file;
  root["curves"] = std::move(curves);

  nlohmann::ordered_json findings = nlohmann::ordered_json::array();
  for (const AuditFinding& f : audit.findings) {
    nlohmann::ordered_json finding = nlohmann::ordered_json::object();
    finding["rule_id"] = audit_rule_name(f.rule);
    finding["severity"] = severity_name(f.severity);
    finding["message"] = f.message;
    nlohmann::ordered_json evidence = nlohmann::ordered_json::object();
    for (const auto& [key, value] : f.evidence) evidence[key] = value;
    finding["evidence"] = std::move(evidence);
    findings.push_back(std::move(finding));
  }
  nlohmann::ordered_json audit_node = nlohmann::ordered_json::object();
  audit_node["findings"] = std::move(findings);
  root["audit"] = std::move(audit_node);

  return root;
}

}  // namespace imbeval
