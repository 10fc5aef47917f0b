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

// Centroid selection: every frame of a segment gets a weighted sum of
// min-max normalized features, and the best frames represent the segment.

#ifndef FRAMESUM_CENTROID_H_
#define FRAMESUM_CENTROID_H_

#include <array>
#include <span>
#include <vector>

#include "framesum/frame.h"
#include "framesum/segmentation.h"
#include "framesum/similarity_graph.h"

namespace framesum {

inline constexpr int kNumFeatures = 5;

struct FeatureWeights {
  double in_degree = 2;
  double out_degree = 2;
  double position = 1;
  double length = 1;
  double named_entities = 1;

  std::array<double, kNumFeatures> AsArray() const {
    return {in_degree, out_degree, position, length, named_entities};
  }
  bool AllZero() const;
  FeatureWeights Scaled(double factor) const;
};

struct FrameFeatures {
  int in_degree = 0;
  int out_degree = 0;
  double position = 0;  // 1.0 for the first sentence, 0.0 for the last
  int length = 0;       // verb plus argument tokens
  int named_entities = 0;

  std::array<double, kNumFeatures> AsArray() const {
    return {static_cast<double>(in_degree), static_cast<double>(out_degree),
            position, static_cast<double>(length),
            static_cast<double>(named_entities)};
  }
  bool operator==(const FrameFeatures &) const = default;
};

// Named entities: tokens hinted proper_noun; unhinted tokens count when they
// are capitalized and are not the sentence's first word. Throws
// std::invalid_argument for an unknown frame.
FrameFeatures ComputeFeatures(const Document &doc, const FrameGraph &graph,
                              int frame_id);

struct FeatureNorms {
  std::array<double, kNumFeatures> min{};
  std::array<double, kNumFeatures> max{};

  static FeatureNorms Over(std::span<const FrameFeatures> features);
};

// Dot product of the weights with the normalized features. A feature that
// is constant over the segment normalizes to 0.
double FeatureScore(const FrameFeatures &features,
                    const FeatureWeights &weights, const FeatureNorms &norms);

struct ScoredFrame {
  int frame_id = 0;
  double score = 0;
  FrameFeatures features;
};

struct SegmentCentroids {
  int segment_id = 0;
  std::vector<ScoredFrame> centroids;  // best first
};

struct CentroidSelection {
  std::vector<SegmentCentroids> segments;

  // Selected frame ids in segment order.
  std::vector<int> FrameIds() const;
};

// Takes max(1, ceil(fraction * |segment|)) frames per segment, best score
// first with ties to the lower frame id. A frame is selected at most once;
// later segments fall through to their next unclaimed frame. Throws
// ConfigError unless 0 < fraction <= 1.
CentroidSelection SelectCentroids(const Document &doc, const FrameGraph &graph,
                                  const Segmentation &segmentation,
                                  const FeatureWeights &weights,
                                  double fraction);

}  // namespace framesum

#endif  // FRAMESUM_CENTROID_H_
