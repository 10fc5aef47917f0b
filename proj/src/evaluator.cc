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

#include "framesum/evaluator.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "framesum/errors.h"
#include "framesum/similarity_graph.h"

namespace framesum {

double SelfScore(const FrameSignature &s, double lexical_weight) {
  return ScorePair(s, s, lexical_weight).weight();
}

double FrameSim(const FrameSignature &si, const FrameSignature &sj,
                double lexical_weight) {
  const double normalizer = std::max(1.0, SelfScore(si, lexical_weight));
  const double sim = ScorePair(si, sj, lexical_weight).weight() / normalizer;
  return std::clamp(sim, 0.0, 1.0);
}

EvalReport Evaluate(std::span<const FrameSignature> centroids,
                    std::span<const FrameSignature> references,
                    double lexical_weight) {
  EvalReport report;
  for (const FrameSignature &centroid : centroids) {
    CentroidMatch match;
    match.centroid_id = centroid.frame_id;
    for (const FrameSignature &reference : references) {
      const double sim = FrameSim(centroid, reference, lexical_weight);
      const bool better =
          !match.reference_id || sim > match.sim ||
          (sim == match.sim && reference.frame_id < *match.reference_id);
      if (better) {
        match.reference_id = reference.frame_id;
        match.sim = sim;
        match.raw = ScorePair(centroid, reference, lexical_weight).weight();
      }
    }
    report.raw_total += match.raw;
    report.aggregate += match.sim;
    report.matches.push_back(match);
  }
  if (!report.matches.empty()) {
    report.aggregate /= static_cast<double>(report.matches.size());
  }
  return report;
}

nlohmann::ordered_json EvalReport::ToJson() const {
  auto rows = nlohmann::ordered_json::array();
  for (const CentroidMatch &m : matches) {
    nlohmann::ordered_json row = {{"centroid_frame_id", m.centroid_id}};
    row["reference_frame_id"] =
        m.reference_id ? nlohmann::ordered_json(*m.reference_id) : nullptr;
    row["sim"] = m.sim;
    row["raw"] = m.raw;
    rows.push_back(std::move(row));
  }
  return {{"matches", std::move(rows)},
          {"aggregate", aggregate},
          {"raw_total", raw_total}};
}

// Quality ratings.

std::string_view QualityKey(QualityAttribute attribute) {
  switch (attribute) {
    case QualityAttribute::kInformationContent: return "information_content";
    case QualityAttribute::kGrammaticalCorrectness:
      return "grammatical_correctness";
    case QualityAttribute::kAbstractness: return "abstractness";
    case QualityAttribute::kExpressiveness: return "expressiveness";
    case QualityAttribute::kExcessDetail: return "excess_detail";
  }
  return "";
}

std::string_view QualityLabel(QualityAttribute attribute) {
  switch (attribute) {
    case QualityAttribute::kInformationContent: return "Information Content";
    case QualityAttribute::kGrammaticalCorrectness:
      return "Grammatical Correctness";
    case QualityAttribute::kAbstractness: return "Abstractness";
    case QualityAttribute::kExpressiveness: return "Expressiveness";
    case QualityAttribute::kExcessDetail: return "Excess/Unnecessary Detail";
  }
  return "";
}

QualityRatings QualityRatings::FromJson(const nlohmann::json &j) {
  if (!j.is_object()) throw ParseError("ratings must be a JSON object");
  QualityRatings out;
  for (QualityAttribute attribute : kQualityAttributes) {
    const std::string key(QualityKey(attribute));
    auto it = j.find(key);
    if (it == j.end() || !it->is_array()) {
      throw ParseError("ratings: missing list '" + key + "'");
    }
    for (const auto &value : *it) {
      if (!value.is_number_integer()) {
        throw ParseError("ratings: non-integer value in '" + key + "'");
      }
      const int rating = value.get<int>();
      if (rating < 1 || rating > 5) {
        throw ParseError("ratings: " + std::to_string(rating) + " in '" + key +
                         "' is outside [1, 5]");
      }
      out[attribute].push_back(rating);
    }
  }
  return out;
}

MeanSd ComputeMeanSd(std::span<const int> values) {
  if (values.empty()) throw std::invalid_argument("empty rating list");
  const double n = static_cast<double>(values.size());
  double sum = 0;
  for (int v : values) sum += v;
  MeanSd out;
  out.mean = sum / n;
  double squares = 0;
  for (int v : values) squares += (v - out.mean) * (v - out.mean);
  out.sd = std::sqrt(squares / n);
  return out;
}

std::vector<QualityRow> QualityStats(const QualityRatings &ratings) {
  std::vector<QualityRow> rows;
  for (QualityAttribute attribute : kQualityAttributes) {
    const std::vector<int> &values = ratings[attribute];
    if (values.empty()) {
      throw ParseError("ratings: empty list '" +
                       std::string(QualityKey(attribute)) + "'");
    }
    const MeanSd stats = ComputeMeanSd(values);
    rows.push_back({std::string(QualityLabel(attribute)), stats.mean, stats.sd});
  }
  return rows;
}

namespace {

constexpr std::string_view kTableHeader =
    "S.No\tSummary Quality Attributes\t\t\n"
    "\tQuality\tMean\tStandard Deviation\n";

std::string TwoDecimals(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  return buf;
}

double ParseDecimal(const std::string &field, int line) {
  char *end = nullptr;
  const double value = std::strtod(field.c_str(), &end);
  if (field.empty() || end != field.c_str() + field.size()) {
    throw ParseError("quality table line " + std::to_string(line) +
                     ": bad number '" + field + "'");
  }
  return value;
}

}  // namespace

std::string FormatQualityTable(std::span<const QualityRow> rows) {
  std::string out(kTableHeader);
  int n = 0;
  for (const QualityRow &row : rows) {
    out += std::to_string(++n) + "\t" + row.label + "\t" + TwoDecimals(row.mean) +
           "\t" + TwoDecimals(row.sd) + "\n";
  }
  return out;
}

std::vector<QualityRow> ParseQualityTable(std::string_view text) {
  if (!text.starts_with(kTableHeader)) {
    throw ParseError("quality table: unexpected header");
  }
  std::istringstream in{std::string(text.substr(kTableHeader.size()))};
  std::vector<QualityRow> rows;
  std::string line;
  int line_number = 2;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::istringstream cells(line);
    for (std::string cell; std::getline(cells, cell, '\t');) {
      fields.push_back(cell);
    }
    if (fields.size() != 4) {
      throw ParseError("quality table line " + std::to_string(line_number) +
                       ": expected 4 tab-separated fields");
    }
    if (fields[0] != std::to_string(rows.size() + 1)) {
      throw ParseError("quality table line " + std::to_string(line_number) +
                       ": bad row number '" + fields[0] + "'");
    }
    rows.push_back({fields[1], ParseDecimal(fields[2], line_number),
                    ParseDecimal(fields[3], line_number)});
  }
  return rows;
}

}  // namespace framesum
