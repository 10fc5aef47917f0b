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

#ifndef FRAMESUM_DOT_WRITER_H_
#define FRAMESUM_DOT_WRITER_H_

#include <string>

#include "framesum/segmentation.h"
#include "framesum/similarity_graph.h"

namespace framesum {

// GraphViz text. Nodes are named f<frame_id>; edge labels carry the weight
// and the priority class. With a segmentation, each segment becomes a
// cluster; a frame shared by several segments is drawn in the first one
// and the cluster label lists all members.
std::string GraphToDot(const FrameGraph &graph,
                       const Segmentation *segmentation = nullptr);

// Shortest text that reads back as the same double ("4", "2.5").
std::string FormatNumber(double value);

}  // namespace framesum

#endif  // FRAMESUM_DOT_WRITER_H_
