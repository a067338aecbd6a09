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

#include <cmath>
#include <stdexcept>

#include "imbeval/core.hpp"

namespace imbeval {

namespace detail {

inline void require_valid_cells(const ConfusionMatrix& cm) {
  const double cells[] = {cm.tp, cm.fp, cm.tn, cm.fn};
  for (double c : cells) {
    if (!std::isfinite(c) || c < 0.0) {
      throw std::invalid_argument(
          "confusion matrix cells must be finite and >= 0");
    }
  }
}

}  // namespace detail

/// Counts predictions at one decision threshold. A sample is predicted
/// positive iff score >= threshold; ties at the threshold predict positive.
/// threshold = +inf is the all-reject sweep endpoint, -inf the all-accept one.
inline ConfusionMatrix confusion_at_threshold(const ScoredDataset& dataset,
                                              double threshold) {
  if (dataset.empty()) throw MetricError("empty dataset");
  if (std::isnan(threshold)) {
    throw std::invalid_argument("threshold must not be NaN");
  }
  ConfusionMatrix cm;
  for (const LabeledScore& s : dataset.samples()) {
    const bool predicted_positive = s.score >= threshold;
    if (s.label == Label::positive) {
      (predicted_positive ? cm.tp : cm.fn) += 1.0;
    } else {
      (predicted_positive ? cm.fp : cm.tn) += 1.0;
    }
  }
  return cm;
}

inline double tpr(const ConfusionMatrix& cm) {
  detail::require_valid_cells(cm);
  if (cm.tp + cm.fn == 0.0) {
    throw MetricError("tpr undefined: no positive samples");
  }
  return cm.tp / (cm.tp + cm.fn);
}

inline double fpr(const ConfusionMatrix& cm) {
  detail::require_valid_cells(cm);
  if (cm.fp + cm.tn == 0.0) {
    throw MetricError("fpr undefined: no negative samples");
  }
  return cm.fp / (cm.fp + cm.tn);
}

/// False rejection rate, 1 - TPR.
inline double frr(const ConfusionMatrix& cm) { return 1.0 - tpr(cm); }

inline double recall(const ConfusionMatrix& cm) { return tpr(cm); }

inline double precision(const ConfusionMatrix& cm) {
  detail::require_valid_cells(cm);
  if (cm.tp + cm.fp == 0.0) {
    throw MetricError("precision undefined: no detections");
  }
  return cm.tp / (cm.tp + cm.fp);
}

inline double accuracy(const ConfusionMatrix& cm) {
  detail::require_valid_cells(cm);
  const double total = cm.total();
  if (total == 0.0) {
    throw MetricError("accuracy undefined: empty confusion matrix");
  }
  return (cm.tp + cm.tn) / total;
}

/// Harmonic mean of precision and recall.
inline double f_score(const ConfusionMatrix& cm) {
  const double p = precision(cm);
  const double r = recall(cm);
  if (p + r == 0.0) {
    throw MetricError("F-score undefined: precision and recall are both zero");
  }
  return 2.0 * p * r / (p + r);
}

/// Precision attained at a ROC operating point (tpr, fpr) on a population
/// with class ratio ir: TPR / (FPR/IR + TPR).
inline double precision_from_roc_point(double tpr_value, double fpr_value,
                                       const ImbalanceRatio& ir) {
  if (!(tpr_value >= 0.0 && tpr_value <= 1.0) ||
      !(fpr_value >= 0.0 && fpr_value <= 1.0)) {
    throw std::invalid_argument("tpr and fpr must lie in [0,1]");
  }
  if (tpr_value == 0.0 && fpr_value == 0.0) {
    throw MetricError("precision undefined: no detections");
  }
  return tpr_value / (fpr_value / ir.value() + tpr_value);
}

}  // namespace imbeval
