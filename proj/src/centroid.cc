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

#include "framesum/centroid.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>

#include "framesum/errors.h"

namespace framesum {

bool FeatureWeights::AllZero() const {
  for (double w : AsArray()) {
    if (w != 0) return false;
  }
  return true;
}

FeatureWeights FeatureWeights::Scaled(double factor) const {
  return {in_degree * factor, out_degree * factor, position * factor,
          length * factor, named_entities * factor};
}

namespace {

std::string_view FirstWord(std::string_view sentence) {
  auto begin = sentence.find_first_not_of(' ');
  if (begin == std::string_view::npos) return {};
  auto end = sentence.find(' ', begin);
  return sentence.substr(begin, end == std::string_view::npos
                                    ? std::string_view::npos
                                    : end - begin);
}

bool IsCapitalized(const std::string &text) {
  return !text.empty() && std::isupper(static_cast<unsigned char>(text[0]));
}

int CountNamedEntities(const Frame &frame, std::string_view first_word) {
  int count = 0;
  bool initial_seen = false;
  auto visit = [&](const Token &token) {
    if (token.pos_hint) {
      if (*token.pos_hint == PosHint::kProperNoun) ++count;
      return;
    }
    if (!initial_seen && token.text == first_word) {
      initial_seen = true;
      return;
    }
    if (IsCapitalized(token.text)) ++count;
  };
  for (const Argument &arg : frame.args) {
    for (const Token &token : arg.tokens) visit(token);
  }
  visit(frame.verb);
  return count;
}

}  // namespace

FrameFeatures ComputeFeatures(const Document &doc, const FrameGraph &graph,
                              int frame_id) {
  const Frame *frame = doc.FindFrame(frame_id);
  if (frame == nullptr) {
    throw std::invalid_argument("unknown frame_id " + std::to_string(frame_id));
  }
  FrameFeatures features;
  features.in_degree = static_cast<int>(graph.InDegree(frame_id));
  features.out_degree = static_cast<int>(graph.OutDegree(frame_id));
  const int last = std::max<int>(1, static_cast<int>(doc.sentences.size()) - 1);
  features.position = 1.0 - static_cast<double>(frame->sentence_index) / last;
  features.length = 1;
  for (const Argument &arg : frame->args) {
    features.length += static_cast<int>(arg.tokens.size());
  }
  features.named_entities =
      CountNamedEntities(*frame, FirstWord(doc.sentences[frame->sentence_index]));
  return features;
}

FeatureNorms FeatureNorms::Over(std::span<const FrameFeatures> features) {
  FeatureNorms norms;
  if (features.empty()) return norms;
  norms.min = norms.max = features.front().AsArray();
  for (const FrameFeatures &f : features) {
    const auto values = f.AsArray();
    for (int k = 0; k < kNumFeatures; ++k) {
      norms.min[k] = std::min(norms.min[k], values[k]);
      norms.max[k] = std::max(norms.max[k], values[k]);
    }
  }
  return norms;
}

double FeatureScore(const FrameFeatures &features,
                    const FeatureWeights &weights, const FeatureNorms &norms) {
  const auto values = features.AsArray();
  const auto w = weights.AsArray();
  double score = 0;
  for (int k = 0; k < kNumFeatures; ++k) {
    const double range = norms.max[k] - norms.min[k];
    if (range <= 0) continue;
    score += w[k] * (values[k] - norms.min[k]) / range;
  }
  return score;
}

std::vector<int> CentroidSelection::FrameIds() const {
  std::vector<int> ids;
  for (const SegmentCentroids &segment : segments) {
    for (const ScoredFrame &frame : segment.centroids) {
      ids.push_back(frame.frame_id);
    }
  }
  return ids;
}

namespace {

// Scores that differ only by floating-point rounding rank as ties, so that
// rescaling all weights never reorders frames.
bool RanksBefore(const ScoredFrame &a, const ScoredFrame &b) {
  const double tolerance =
      1e-9 * std::max({1.0, std::fabs(a.score), std::fabs(b.score)});
  if (std::fabs(a.score - b.score) > tolerance) return a.score > b.score;
  return a.frame_id < b.frame_id;
}

}  // namespace

CentroidSelection SelectCentroids(const Document &doc, const FrameGraph &graph,
                                  const Segmentation &segmentation,
                                  const FeatureWeights &weights,
                                  double fraction) {
  if (!(fraction > 0 && fraction <= 1)) {
    throw ConfigError("phi must be in (0, 1], got " + std::to_string(fraction));
  }
  CentroidSelection selection;
  std::unordered_set<int> claimed;
  for (const Segment &segment : segmentation.segments) {
    std::vector<FrameFeatures> features;
    features.reserve(segment.members.size());
    for (int id : segment.members) {
      features.push_back(ComputeFeatures(doc, graph, id));
    }
    const FeatureNorms norms = FeatureNorms::Over(features);
    std::vector<ScoredFrame> ranked;
    for (std::size_t k = 0; k < segment.members.size(); ++k) {
      ranked.push_back({segment.members[k],
                        FeatureScore(features[k], weights, norms),
                        features[k]});
    }
    std::sort(ranked.begin(), ranked.end(), RanksBefore);

    const std::size_t wanted =
        std::max<std::size_t>(1, FractionCount(fraction, ranked.size()));
    SegmentCentroids out;
    out.segment_id = segment.segment_id;
    for (const ScoredFrame &frame : ranked) {
      if (out.centroids.size() == wanted) break;
      if (!claimed.insert(frame.frame_id).second) continue;
      out.centroids.push_back(frame);
    }
    selection.segments.push_back(std::move(out));
  }
  return selection;
}

}  // namespace framesum
