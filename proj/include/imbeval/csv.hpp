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

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "imbeval/core.hpp"
#include "imbeval/curve.hpp"
#include "imbeval/probit.hpp"

namespace imbeval {

/// Row-numbered ingestion failure. Rows count data lines after the header,
/// starting at 1.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& message)
      : std::runtime_error(message) {}
  ParseError(std::size_t row, const std::string& message)
      : std::runtime_error("row " + std::to_string(row) + ": " + message),
        row_(row) {}

  std::optional<std::size_t> row() const { return row_; }

 private:
  std::optional<std::size_t> row_;
};

/// Shortest decimal form that parses back to the same double.
inline std::string format_double(double value) {
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

inline bool parse_double(std::string_view text, double& out) {
  const char* first = text.data();
  const char* last = first + text.size();
  const auto result = std::from_chars(first, last, out);
  return result.ec == std::errc() && result.ptr == last;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace detail

/// Reads `score,label` CSV (UTF-8, LF or CRLF). Any label equal to
/// positive_label is the positive class; the first other token seen becomes
/// the negative class and any third distinct token is rejected, keeping the
/// input strictly binary.
inline ScoredDataset load_scores(const std::filesystem::path& path,
                                 const std::string& positive_label = "1") {
  std::ifstream file(path);
  if (!file) {
    throw ParseError("cannot open input file: " + path.string());
  }
  std::string line;
  if (!std::getline(file, line)) {
    throw ParseError("empty file: expected 'score,label' header");
  }
  std::string_view header = line;
  if (header.substr(0, 3) == "\xEF\xBB\xBF") header.remove_prefix(3);
  header = detail::trim(header);
  if (header != "score,label") {
    throw ParseError("missing 'score,label' header (got '" +
                     std::string(header) + "')");
  }

  std::vector<LabeledScore> samples;
  std::optional<std::string> negative_label;
  std::size_t row = 0;
  while (std::getline(file, line)) {
    ++row;
    const std::string_view text = detail::trim(line);
    if (text.empty()) {
      throw ParseError(row, "empty row");
    }
    const std::size_t comma = text.find(',');
    if (comma == std::string_view::npos ||
        text.find(',', comma + 1) != std::string_view::npos) {
      throw ParseError(row, "expected exactly two comma-separated fields");
    }
    const std::string_view score_text = detail::trim(text.substr(0, comma));
    const std::string_view label_text = detail::trim(text.substr(comma + 1));
    double score = 0.0;
    if (!parse_double(score_text, score)) {
      throw ParseError(row, "invalid score '" + std::string(score_text) + "'");
    }
    if (!std::isfinite(score)) {
      throw ParseError(row,
                       "non-finite score '" + std::string(score_text) + "'");
    }
    if (label_text.empty()) {
      throw ParseError(row, "empty label");
    }
    Label label = Label::negative;
    if (label_text == positive_label) {
      label = Label::positive;
    } else if (!negative_label) {
      negative_label = std::string(label_text);
    } else if (label_text != *negative_label) {
      throw ParseError(row, "unknown label '" + std::string(label_text) +
                                "' (classes so far: '" + positive_label +
                                "', '" + *negative_label + "')");
    }
    samples.push_back({score, label});
  }
  if (samples.empty()) {
    throw ParseError("empty dataset: no data rows");
  }
  return ScoredDataset(std::move(samples));
}

/// Writes a curve as CSV with columns threshold,x,y plus per-kind companions:
/// DET gains probit_x,probit_y (normal-deviate axes, rates clamped to
/// [1e-6, 1-1e-6]); adjusted-precision gains ir = x/(1-x). A PR curve may
/// carry a prior-adjusted companion sharing its vertex set, emitted as a
/// y_adjusted column.
inline void write_curve_csv(std::ostream& os, const Curve& curve,
                            const Curve* pr_adjusted = nullptr) {
  if (pr_adjusted != nullptr) {
    if (curve.kind != CurveKind::pr) {
      throw std::invalid_argument("companion column is only valid for PR");
    }
    if (pr_adjusted->points.size() != curve.points.size()) {
      throw std::invalid_argument(
          "adjusted PR companion must share the vertex set");
    }
  }
  switch (curve.kind) {
    case CurveKind::roc:
      os << "threshold,x,y\n";
      for (const CurvePoint& p : curve.points) {
        os << format_double(p.threshold) << ',' << format_double(p.x) << ','
           << format_double(p.y) << '\n';
      }
      break;
    case CurveKind::det:
      os << "threshold,x,y,probit_x,probit_y\n";
      for (const CurvePoint& p : curve.points) {
        os << format_double(p.threshold) << ',' << format_double(p.x) << ','
           << format_double(p.y) << ',' << format_double(clamped_probit(p.x))
           << ',' << format_double(clamped_probit(p.y)) << '\n';
      }
      break;
    case CurveKind::pr:
      os << (pr_adjusted != nullptr ? "threshold,x,y,y_adjusted\n"
                                    : "threshold,x,y\n");
      for (std::size_t i = 0; i < curve.points.size(); ++i) {
        const CurvePoint& p = curve.points[i];
        os << format_double(p.threshold) << ',' << format_double(p.x) << ','
           << format_double(p.y);
        if (pr_adjusted != nullptr) {
          os << ',' << format_double(pr_adjusted->points[i].y);
        }
        os << '\n';
      }
      break;
    case CurveKind::adjusted_precision:
      os << "threshold,x,y,ir\n";
      for (const CurvePoint& p : curve.points) {
        os << format_double(p.threshold) << ',' << format_double(p.x) << ','
           << format_double(p.y) << ',' << format_double(p.x / (1.0 - p.x))
           << '\n';
      }
      break;
  }
}

}  // namespace imbeval
