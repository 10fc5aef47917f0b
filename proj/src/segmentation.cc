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

#include "framesum/segmentation.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace framesum {

bool Segment::Contains(int frame_id) const {
  return std::find(members.begin(), members.end(), frame_id) != members.end();
}

int Segmentation::FirstSegmentOf(int frame_id) const {
  for (const Segment &segment : segments) {
    if (segment.Contains(frame_id)) return segment.segment_id;
  }
  return -1;
}

namespace {

class SegmentBuilder {
 public:
  int Create() {
    segments_.push_back({static_cast<int>(segments_.size()), {}});
    return segments_.back().segment_id;
  }

  void Add(int segment_id, int frame_id) {
    Segment &segment = segments_[segment_id];
    if (segment.Contains(frame_id)) return;
    segment.members.push_back(frame_id);
    auto [it, inserted] = first_segment_.emplace(frame_id, segment_id);
    if (!inserted) it->second = std::min(it->second, segment_id);
  }

  // Lowest segment id holding the frame, or -1.
  int Find(int frame_id) const {
    auto it = first_segment_.find(frame_id);
    return it == first_segment_.end() ? -1 : it->second;
  }

  std::vector<Segment> Release() && { return std::move(segments_); }

 private:
  std::vector<Segment> segments_;
  std::unordered_map<int, int> first_segment_;
};

std::vector<Segment> MergeOverlaps(std::vector<Segment> segments) {
  std::vector<int> parent(segments.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::unordered_map<int, int> owner;
  for (const Segment &segment : segments) {
    for (int frame : segment.members) {
      auto [it, inserted] = owner.emplace(frame, segment.segment_id);
      if (!inserted) {
        int a = find(it->second);
        int b = find(segment.segment_id);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  // Roots are the lowest id of their group, so groups come out in order.
  std::map<int, Segment> groups;
  for (const Segment &segment : segments) {
    Segment &group = groups[find(segment.segment_id)];
    for (int frame : segment.members) {
      if (!group.Contains(frame)) group.members.push_back(frame);
    }
  }
  std::vector<Segment> merged;
  for (auto &[root, group] : groups) {
    group.segment_id = static_cast<int>(merged.size());
    merged.push_back(std::move(group));
  }
  return merged;
}

}  // namespace

Segmentation CreateSegments(const Document &doc, const FrameGraph &graph,
                            bool merge_overlaps) {
  if (graph.nodes().size() != doc.frames.size()) {
    throw std::invalid_argument("graph nodes do not match document frames");
  }
  SegmentBuilder builder;
  for (const Frame &frame : doc.frames) {
    if (!graph.HasNode(frame.frame_id)) {
      throw std::invalid_argument("frame " + std::to_string(frame.frame_id) +
                                  " is not a graph node");
    }
    int segment = builder.Find(frame.frame_id);
    if (segment < 0) {
      segment = builder.Create();
      builder.Add(segment, frame.frame_id);
    }
    for (int target : graph.OutTargets(frame.frame_id)) {
      builder.Add(segment, target);
    }
  }
  Segmentation result;
  result.segments = std::move(builder).Release();
  if (merge_overlaps) result.segments = MergeOverlaps(std::move(result.segments));
  return result;
}

std::vector<SegmentStat> ComputeSegmentStats(const Segmentation &segmentation,
                                             const FrameGraph &graph) {
  std::vector<SegmentStat> stats;
  stats.reserve(segmentation.segments.size());
  for (const Segment &segment : segmentation.segments) {
    std::unordered_set<int> members(segment.members.begin(),
                                    segment.members.end());
    SegmentStat stat;
    stat.size = segment.members.size();
    for (const Edge &edge : graph.edges()) {
      if (members.contains(edge.source) && members.contains(edge.target)) {
        ++stat.internal_edges;
      }
    }
    stats.push_back(stat);
  }
  return stats;
}

}  // namespace framesum
