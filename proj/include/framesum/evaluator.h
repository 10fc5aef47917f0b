// Copyright 2026 The Framesum Authors.
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

// Summary evaluation against a reference summary, and summary statistics
// for human quality ratings.

#ifndef FRAMESUM_EVALUATOR_H_
#define FRAMESUM_EVALUATOR_H_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "framesum/signature.h"
#include "json.hpp"

namespace framesum {

// A + V of a signature against itself.
double SelfScore(const FrameSignature &s, double lexical_weight);

// (A + V)(si, sj) / max(1, SelfScore(si)), clipped to [0, 1]. Not symmetric.
double FrameSim(const FrameSignature &si, const FrameSignature &sj,
                double lexical_weight);

struct CentroidMatch {
  int centroid_id = 0;
  std::optional<int> reference_id;  // empty when there are no references
  double sim = 0;                   // normalized
  double raw = 0;                   // A + V of the best match
};

struct EvalReport {
  std::vector<CentroidMatch> matches;
  double aggregate = 0;  // mean of normalized sims
  double raw_total = 0;  // sum of raw best-match scores

  nlohmann::ordered_json ToJson() const;
};

// For each centroid, the reference frame with the highest FrameSim (ties go
// to the lowest reference frame id).
EvalReport Evaluate(std::span<const FrameSignature> centroids,
                    std::span<const FrameSignature> references,
                    double lexical_weight);

// Human ratings on a 1..5 scale, one list per attribute.
enum class QualityAttribute {
  kInformationContent,
  kGrammaticalCorrectness,
  kAbstractness,
  kExpressiveness,
  kExcessDetail,
};

inline constexpr std::array<QualityAttribute, 5> kQualityAttributes = {
    QualityAttribute::kInformationContent,
    QualityAttribute::kGrammaticalCorrectness,
    QualityAttribute::kAbstractness, QualityAttribute::kExpressiveness,
    QualityAttribute::kExcessDetail};

// JSON key, e.g. "information_content".
std::string_view QualityKey(QualityAttribute attribute);
// Table label, e.g. "Information Content".
std::string_view QualityLabel(QualityAttribute attribute);

struct QualityRatings {
  std::array<std::vector<int>, 5> ratings;

  std::vector<int> &operator[](QualityAttribute a) {
    return ratings[static_cast<int>(a)];
  }
  const std::vector<int> &operator[](QualityAttribute a) const {
    return ratings[static_cast<int>(a)];
  }

  // Object keyed by QualityKey. Throws ParseError on a missing key, a
  // non-integer or a rating outside [1, 5].
  static QualityRatings FromJson(const nlohmann::json &j);
};

struct MeanSd {
  double mean = 0;
  double sd = 0;  // population standard deviation
};

// Throws std::invalid_argument for an empty list.
MeanSd ComputeMeanSd(std::span<const int> values);

struct QualityRow {
  std::string label;
  double mean = 0;
  double sd = 0;

  bool operator==(const QualityRow &) const = default;
};

// Throws ParseError if any attribute has no ratings.
std::vector<QualityRow> QualityStats(const QualityRatings &ratings);

// Tab-separated table with two header lines and rows
// "<n>\t<label>\t<mean>\t<sd>" printed to two decimals.
std::string FormatQualityTable(std::span<const QualityRow> rows);
// Reads a table written by FormatQualityTable. Throws ParseError.
std::vector<QualityRow> ParseQualityTable(std::string_view text);

}  // namespace framesum

#endif  // FRAMESUM_EVALUATOR_H_
