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
#include <limits>
#include <stdexcept>
#include <vector>

#include "imbeval/core.hpp"
#include "imbeval/curve.hpp"
#include "imbeval/metrics.hpp"

namespace imbeval {

/// Minority prior of the evaluation set (p_test) paired with the prior
/// expected at deployment (p_real). Both strictly inside (0,1).
class PriorSpec {
 public:
  PriorSpec(double p_test, double p_real) : p_test_(p_test), p_real_(p_real) {
    if (!(p_test_ > 0.0) || !(p_test_ < 1.0)) {
      throw std::invalid_argument("p_test must lie in (0,1)");
    }
    if (!(p_real_ > 0.0) || !(p_real_ < 1.0)) {
      throw std::invalid_argument("p_real must lie in (0,1)");
    }
  }

  double p_test() const { return p_test_; }
  double p_real() const { return p_real_; }

  // Reweighting factors: positive counts scale by r = p_real/p_test and
  // negative counts by s = (1-p_real)/(1-p_test).
  double positive_weight() const { return p_real_ / p_test_; }
  double negative_weight() const {
    return (1.0 - p_real_) / (1.0 - p_test_);
  }

 private:
  double p_test_;
  double p_real_;
};

/// Precision the same classifier would show if the test counts were
/// reweighted from p_test to p_real: (r TP) / (r TP + s FP). Reduces to plain
/// precision(cm) when p_real == p_test.
inline double adjusted_precision(const ConfusionMatrix& cm,
                                 const PriorSpec& priors) {
  detail::require_valid_cells(cm);
  if (cm.tp + cm.fp == 0.0) {
    throw MetricError("adjusted precision undefined: no detections");
  }
  const double weighted_tp = priors.positive_weight() * cm.tp;
  const double weighted_fp = priors.negative_weight() * cm.fp;
  return weighted_tp / (weighted_tp + weighted_fp);
}

/// Harmonic mean of adjusted precision and recall. Recall conditions on the
/// true class, so it is prior-invariant and enters unweighted.
inline double adjusted_f_score(const ConfusionMatrix& cm,
                               const PriorSpec& priors) {
  const double p = adjusted_precision(cm, priors);
  const double r = recall(cm);
  if (p + r == 0.0) {
    throw MetricError(
        "F-score undefined: adjusted precision and recall are both zero");
  }
  return 2.0 * p * r / (p + r);
}

/// Log-uniform prior grid over [p_min, p_max] with points_per_decade samples
/// per decade; both endpoints are always in the grid.
struct PriorSweep {
  double p_min = 1e-4;
  double p_max = 0.5;
  int points_per_decade = 50;
};

inline void validate(const PriorSweep& sweep) {
  if (!(sweep.p_min > 0.0) || !(sweep.p_max < 1.0) ||
      !(sweep.p_min < sweep.p_max)) {
    throw std::invalid_argument("prior sweep requires 0 < p_min < p_max < 1");
  }
  if (sweep.points_per_decade < 1) {
    throw std::invalid_argument("points_per_decade must be >= 1");
  }
  const double decades = std::log10(sweep.p_max) - std::log10(sweep.p_min);
  if (decades * sweep.points_per_decade > 1e7) {
    throw std::invalid_argument("prior sweep too dense");
  }
}

inline std::vector<double> log_spaced_priors(const PriorSweep& sweep) {
  validate(sweep);
  const double lo = std::log10(sweep.p_min);
  const double hi = std::log10(sweep.p_max);
  const double step = 1.0 / sweep.points_per_decade;
  std::vector<double> grid;
  grid.push_back(sweep.p_min);
  for (int k = 1;; ++k) {
    const double exponent =
        lo + static_cast<double>(k) / sweep.points_per_decade;
    // The forced p_max endpoint replaces any grid point within half a step.
    if (exponent >= hi - 0.5 * step) break;
    grid.push_back(std::pow(10.0, exponent));
  }
  grid.push_back(sweep.p_max);
  return grid;
}

/// Adjusted precision of one fixed operating point swept across deployment
/// priors. x is p_real; y is strictly increasing in p_real whenever tp and fp
/// are both positive.
inline Curve adjusted_precision_curve(const ConfusionMatrix& cm,
                                      const PriorSweep& sweep, double p_test) {
  detail::require_valid_cells(cm);
  if (cm.tp + cm.fp == 0.0) {
    throw MetricError("adjusted precision undefined: no detections");
  }
  if (!(p_test > 0.0) || !(p_test < 1.0)) {
    throw std::invalid_argument("p_test must lie in (0,1)");
  }
  Curve curve;
  curve.kind = CurveKind::adjusted_precision;
  curve.p_test = p_test;
  curve.pos_count = static_cast<std::size_t>(std::llround(cm.tp + cm.fn));
  curve.neg_count = static_cast<std::size_t>(std::llround(cm.fp + cm.tn));
  const std::vector<double> priors = log_spaced_priors(sweep);
  curve.points.reserve(priors.size());
  for (double p_real : priors) {
    curve.points.push_back({std::numeric_limits<double>::quiet_NaN(), p_real,
                            adjusted_precision(cm, PriorSpec(p_test, p_real))});
  }
  return curve;
}

}  // namespace imbeval
