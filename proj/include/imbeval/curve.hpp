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

#include <cstddef>
#include <limits>
#include <vector>

namespace imbeval {

enum class CurveKind { roc, det, pr, adjusted_precision };

inline const char* curve_kind_name(CurveKind kind) {
  switch (kind) {
    case CurveKind::roc:
      return "roc";
    case CurveKind::det:
      return "det";
    case CurveKind::pr:
      return "pr";
    case CurveKind::adjusted_precision:
      return "adjprec";
  }
  return "unknown";
}

/// One operating point. threshold is the decision cut (score >= threshold
/// predicts positive), +inf for the all-reject sweep endpoint; NaN when the
/// kind has no per-point threshold (adjusted-precision sweeps over priors).
struct CurvePoint {
  double threshold = std::numeric_limits<double>::quiet_NaN();
  double x = 0.0;
  double y = 0.0;
};

/// Ordered operating points of one declared kind, x ascending with ties kept
/// in descending-threshold order.
struct Curve {
  CurveKind kind = CurveKind::roc;
  std::vector<CurvePoint> points;
  std::size_t pos_count = 0;
  std::size_t neg_count = 0;
  double p_test = std::numeric_limits<double>::quiet_NaN();
};

}  // namespace imbeval
