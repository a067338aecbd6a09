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
#include <cstddef>
#include <stdexcept>

#include "imbeval/curve.hpp"

namespace imbeval {

/// FPR interval over which partial AUC is computed.
class RegionOfInterest {
 public:
  RegionOfInterest(double fpr_min, double fpr_max)
      : fpr_min_(fpr_min), fpr_max_(fpr_max) {
    if (!(fpr_min_ >= 0.0) || !(fpr_max_ <= 1.0) || !(fpr_min_ < fpr_max_)) {
      throw std::invalid_argument(
          "region of interest requires 0 <= fpr_min < fpr_max <= 1");
    }
  }

  double fpr_min() const { return fpr_min_; }
  double fpr_max() const { return fpr_max_; }
  double width() const { return fpr_max_ - fpr_min_; }

 private:
  double fpr_min_;
  double fpr_max_;
};

namespace detail {

inline void require_roc(const Curve& curve) {
  if (curve.kind != CurveKind::roc) {
    throw std::invalid_argument("operation requires a ROC curve");
  }
  if (curve.points.size() < 2) {
    throw std::invalid_argument("ROC curve needs at least two points");
  }
}

// y on the segment a-b at x. Exact at both segment endpoints: clipping an
// integration interval at a vertex must reproduce the vertex value bit for
// bit, otherwise partial areas stop adding up to the full area.
inline double segment_y(const CurvePoint& a, const CurvePoint& b, double x) {
  if (x <= a.x) return a.y;
  if (x >= b.x) return b.y;
  const double t = (x - a.x) / (b.x - a.x);
  return a.y + t * (b.y - a.y);
}

}  // namespace detail

/// Trapezoidal area under the full ROC polyline. Equals the probability that
/// a uniformly random positive outscores a uniformly random negative, with
/// score ties counted as one half.
inline double auc(const Curve& curve) {
  detail::require_roc(curve);
  double area = 0.0;
  for (std::size_t i = 0; i + 1 < curve.points.size(); ++i) {
    const CurvePoint& a = curve.points[i];
    const CurvePoint& b = curve.points[i + 1];
    area += (b.x - a.x) * (a.y + b.y) * 0.5;
  }
  return area;
}

/// TPR of the polyline at the given FPR. Where the curve is vertical
/// (repeated x), the maximum TPR at that FPR is returned.
inline double interpolate_tpr_at_fpr(const Curve& curve, double fpr_value) {
  detail::require_roc(curve);
  if (!(fpr_value >= 0.0) || !(fpr_value <= 1.0)) {
    throw std::invalid_argument("fpr must lie in [0,1]");
  }
  const auto& pts = curve.points;
  // First point strictly right of the query; its predecessor is the last
  // point with x <= query, i.e. the top of any vertical run at that x.
  const auto right =
      std::upper_bound(pts.begin(), pts.end(), fpr_value,
                       [](double v, const CurvePoint& p) { return v < p.x; });
  if (right == pts.end()) return pts.back().y;
  if (right == pts.begin()) return pts.front().y;
  const CurvePoint& a = *(right - 1);
  const CurvePoint& b = *right;
  if (a.x == fpr_value) return a.y;
  return detail::segment_y(a, b, fpr_value);
}

/// Trapezoidal area of the curve restricted to the ROI, with TPR linearly
/// interpolated at both boundaries. Restricted to [0,1] the result is
/// bit-identical to auc(). When normalized, the area is divided by the ROI
/// width so a perfect classifier scores 1 and the result lies in [0,1].
inline double partial_auc(const Curve& curve, const RegionOfInterest& roi,
                          bool normalized = false) {
  detail::require_roc(curve);
  const double lo_bound = roi.fpr_min();
  const double hi_bound = roi.fpr_max();
  double area = 0.0;
  for (std::size_t i = 0; i + 1 < curve.points.size(); ++i) {
    const CurvePoint& a = curve.points[i];
    const CurvePoint& b = curve.points[i + 1];
    const double lo = std::max(lo_bound, a.x);
    const double hi = std::min(hi_bound, b.x);
    if (hi <= lo) continue;
    const double y_lo = detail::segment_y(a, b, lo);
    const double y_hi = detail::segment_y(a, b, hi);
    area += (hi - lo) * (y_lo + y_hi) * 0.5;
  }
  return normalized ? area / roi.width() : area;
}

/// Full-range and ROI-restricted AUC of two curves side by side. inversion is
/// set when the full-AUC winner is not the ROI winner (ties never invert).
struct ComparisonResult {
  double auc_a = 0.0;
  double auc_b = 0.0;
  double pauc_a = 0.0;
  double pauc_b = 0.0;
  bool inversion = false;
};

inline ComparisonResult compare_roi(const Curve& curve_a, const Curve& curve_b,
                                    const RegionOfInterest& roi) {
  ComparisonResult result;
  result.auc_a = auc(curve_a);
  result.auc_b = auc(curve_b);
  result.pauc_a = partial_auc(curve_a, roi);
  result.pauc_b = partial_auc(curve_b, roi);
  result.inversion =
      (result.auc_a > result.auc_b && result.pauc_b > result.pauc_a) ||
      (result.auc_b > result.auc_a && result.pauc_a > result.pauc_b);
  return result;
}

}  // namespace imbeval
