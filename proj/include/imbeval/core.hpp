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
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace imbeval {

/// Thrown when a metric is undefined for the given counts (0/0 denominators,
/// empty inputs). Undefined values are never silently reported as 0 or 1.
class MetricError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Label : std::uint8_t { negative = 0, positive = 1 };

/// One classifier output paired with its ground truth. Higher scores mean
/// "more positive"; the positive class is the minority class of interest.
struct LabeledScore {
  double score = 0.0;
  Label label = Label::negative;
};

/// Immutable evaluation set. Sample order is preserved as ingested; curve
/// builders normalize ordering themselves, so row order never matters.
class ScoredDataset {
 public:
  ScoredDataset() = default;

  explicit ScoredDataset(std::vector<LabeledScore> samples)
      : samples_(std::move(samples)) {
    for (const LabeledScore& s : samples_) {
      if (!std::isfinite(s.score)) {
        throw std::invalid_argument("non-finite score in dataset");
      }
      if (s.label == Label::positive) {
        ++pos_count_;
      } else {
        ++neg_count_;
      }
    }
  }

  const std::vector<LabeledScore>& samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  bool empty() const { return samples_.empty(); }
  std::size_t pos_count() const { return pos_count_; }
  std::size_t neg_count() const { return neg_count_; }

  /// Positive-class prior of this set, pos/(pos+neg). 0 or 1 for a
  /// single-class set; range checks happen where a proper prior is required.
  double p_test() const {
    if (samples_.empty()) throw MetricError("empty dataset");
    return static_cast<double>(pos_count_) /
           static_cast<double>(samples_.size());
  }

 private:
  std::vector<LabeledScore> samples_;
  std::size_t pos_count_ = 0;
  std::size_t neg_count_ = 0;
};

/// TP/FP/TN/FN cells. Integer-valued when counted directly; real-valued cells
/// arise from prior reweighting.
struct ConfusionMatrix {
  double tp = 0.0;
  double fp = 0.0;
  double tn = 0.0;
  double fn = 0.0;

  double total() const { return tp + fp + tn + fn; }
};

/// Minority-to-majority count ratio P/N; an IR of 0.01 means 1:100. Bijective
/// with the minority prior p through p = ir/(1+ir).
class ImbalanceRatio {
 public:
  explicit ImbalanceRatio(double value) : value_(value) {
    if (!std::isfinite(value_) || value_ <= 0.0) {
      throw std::invalid_argument("imbalance ratio must be finite and > 0");
    }
  }

  static ImbalanceRatio from_prior(double minority_prior) {
    if (!(minority_prior > 0.0) || !(minority_prior < 1.0)) {
      throw std::invalid_argument("minority prior must lie in (0,1)");
    }
    return ImbalanceRatio(minority_prior / (1.0 - minority_prior));
  }

  double value() const { return value_; }
  double minority_prior() const { return value_ / (1.0 + value_); }

 private:
  double value_;
};

}  // namespace imbeval
