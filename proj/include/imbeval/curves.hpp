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
#include <limits>
#include <vector>

#include "imbeval/core.hpp"
#include "imbeval/curve.hpp"
#include "imbeval/metrics.hpp"
#include "imbeval/prior_shift.hpp"

namespace imbeval {

namespace detail {

// Cumulative detection counts per distinct score, descending. Entry i holds
// tp/fp for threshold = score_i (everything with score >= score_i). Equal
// scores collapse into a single vertex.
struct SweepVertex {
  double threshold;
  std::size_t tp;
  std::size_t fp;
};

inline std::vector<SweepVertex> threshold_sweep(const ScoredDataset& dataset) {
  std::vector<LabeledScore> sorted = dataset.samples();
  // Normalized ordering, so curves are independent of input row order.
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const LabeledScore& a, const LabeledScore& b) {
                     if (a.score != b.score) return a.score > b.score;
                     return static_cast<int>(a.label) >
                            static_cast<int>(b.label);
                   });
  std::vector<SweepVertex> vertices;
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t i = 0;
  while (i < sorted.size()) {
    const double score = sorted[i].score;
    while (i < sorted.size() && sorted[i].score == score) {
      if (sorted[i].label == Label::positive) {
        ++tp;
      } else {
        ++fp;
      }
      ++i;
    }
    vertices.push_back({score, tp, fp});
  }
  return vertices;
}

}  // namespace detail

/// ROC: one (FPR, TPR) vertex per distinct score plus the +inf all-reject
/// vertex at (0,0). The final vertex, at the minimum score, is always (1,1).
inline Curve roc_curve(const ScoredDataset& dataset) {
  if (dataset.pos_count() == 0 || dataset.neg_count() == 0) {
    throw MetricError("need both classes for ROC");
  }
  const double pos = static_cast<double>(dataset.pos_count());
  const double neg = static_cast<double>(dataset.neg_count());
  Curve curve;
  curve.kind = CurveKind::roc;
  curve.pos_count = dataset.pos_count();
  curve.neg_count = dataset.neg_count();
  curve.p_test = dataset.p_test();
  const auto vertices = detail::threshold_sweep(dataset);
  curve.points.reserve(vertices.size() + 1);
  curve.points.push_back(
      {std::numeric_limits<double>::infinity(), 0.0, 0.0});
  for (const auto& v : vertices) {
    curve.points.push_back({v.threshold, static_cast<double>(v.fp) / neg,
                            static_cast<double>(v.tp) / pos});
  }
  return curve;
}

/// DET: same thresholds as the ROC sweep with y = FRR = 1 - TPR, so
/// det.y == 1 - roc.y holds pointwise.
inline Curve det_curve(const ScoredDataset& dataset) {
  if (dataset.pos_count() == 0 || dataset.neg_count() == 0) {
    throw MetricError("need both classes for DET");
  }
  const double pos = static_cast<double>(dataset.pos_count());
  const double neg = static_cast<double>(dataset.neg_count());
  Curve curve;
  curve.kind = CurveKind::det;
  curve.pos_count = dataset.pos_count();
  curve.neg_count = dataset.neg_count();
  curve.p_test = dataset.p_test();
  const auto vertices = detail::threshold_sweep(dataset);
  curve.points.reserve(vertices.size() + 1);
  curve.points.push_back(
      {std::numeric_limits<double>::infinity(), 0.0, 1.0});
  for (const auto& v : vertices) {
    curve.points.push_back({v.threshold, static_cast<double>(v.fp) / neg,
                            1.0 - static_cast<double>(v.tp) / pos});
  }
  return curve;
}

/// PR: one (recall, precision) vertex per distinct score threshold, stopping
/// at the first vertex that attains full recall. Later thresholds only lower
/// precision at recall 1 and are not emitted; the all-reject endpoint is
/// omitted because its precision is undefined.
inline Curve pr_curve(const ScoredDataset& dataset) {
  if (dataset.pos_count() == 0) {
    throw MetricError("no positive samples");
  }
  const double pos = static_cast<double>(dataset.pos_count());
  Curve curve;
  curve.kind = CurveKind::pr;
  curve.pos_count = dataset.pos_count();
  curve.neg_count = dataset.neg_count();
  curve.p_test = dataset.p_test();
  const auto vertices = detail::threshold_sweep(dataset);
  curve.points.reserve(vertices.size());
  for (const auto& v : vertices) {
    const double tp = static_cast<double>(v.tp);
    const double fp = static_cast<double>(v.fp);
    curve.points.push_back({v.threshold, tp / pos, tp / (tp + fp)});
    if (v.tp == dataset.pos_count()) break;
  }
  return curve;
}

/// PR curve with every vertex's precision reweighted from the dataset prior
/// to p_real. Identical to pr_curve when p_real equals the dataset prior.
inline Curve pr_curve_at_prior(const ScoredDataset& dataset, double p_real) {
  if (dataset.pos_count() == 0) {
    throw MetricError("no positive samples");
  }
  const PriorSpec priors(dataset.p_test(), p_real);
  const double pos = static_cast<double>(dataset.pos_count());
  const double r = priors.positive_weight();
  const double s = priors.negative_weight();
  Curve curve;
  curve.kind = CurveKind::pr;
  curve.pos_count = dataset.pos_count();
  curve.neg_count = dataset.neg_count();
  curve.p_test = dataset.p_test();
  const auto vertices = detail::threshold_sweep(dataset);
  curve.points.reserve(vertices.size());
  for (const auto& v : vertices) {
    const double weighted_tp = r * static_cast<double>(v.tp);
    const double weighted_fp = s * static_cast<double>(v.fp);
    curve.points.push_back({v.threshold, static_cast<double>(v.tp) / pos,
                            weighted_tp / (weighted_tp + weighted_fp)});
    if (v.tp == dataset.pos_count()) break;
  }
  return curve;
}

}  // namespace imbeval
