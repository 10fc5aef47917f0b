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

#ifndef FRAMESUM_SEGMENTATION_H_
#define FRAMESUM_SEGMENTATION_H_

#include <cstddef>
#include <vector>

#include "framesum/frame.h"
#include "framesum/similarity_graph.h"

namespace framesum {

struct Segment {
  int segment_id = 0;
  std::vector<int> members;  // insertion order, no duplicates

  bool Contains(int frame_id) const;
  bool operator==(const Segment &) const = default;
};

struct Segmentation {
  std::vector<Segment> segments;

  // Lowest segment id containing the frame, or -1.
  int FirstSegmentOf(int frame_id) const;
  bool operator==(const Segmentation &) const = default;
};

// Walks the frames in document order. A frame already inside a segment adds
// its out-edge targets to the lowest-numbered segment holding it; any other
// frame opens a new segment with itself and its targets. Segments may
// overlap. With `merge_overlaps`, overlapping segments are then unioned,
// which yields the weakly connected components of the graph.
//
// Throws std::invalid_argument if the graph nodes are not the document's
// frames.
Segmentation CreateSegments(const Document &doc, const FrameGraph &graph,
                            bool merge_overlaps = false);

struct SegmentStat {
  std::size_t size = 0;
  std::size_t internal_edges = 0;  // edges with both ends in the segment

  bool operator==(const SegmentStat &) const = default;
};

std::vector<SegmentStat> ComputeSegmentStats(const Segmentation &segmentation,
                                             const FrameGraph &graph);

}  // namespace framesum

#endif  // FRAMESUM_SEGMENTATION_H_
