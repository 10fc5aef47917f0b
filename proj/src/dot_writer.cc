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

#include "framesum/dot_writer.h"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <unordered_set>

namespace framesum {

std::string FormatNumber(double value) {
  char buf[32];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof(buf), "%.*g", precision, value);
    if (std::strtod(buf, nullptr) == value) break;
  }
  return buf;
}

std::string GraphToDot(const FrameGraph &graph,
                       const Segmentation *segmentation) {
  std::ostringstream out;
  out << "digraph frames {\n";
  out << "  node [shape=box];\n";
  std::unordered_set<int> drawn;
  if (segmentation != nullptr) {
    for (const Segment &segment : segmentation->segments) {
      out << "  subgraph cluster_" << segment.segment_id << " {\n";
      out << "    label=\"S" << segment.segment_id << ":";
      for (int id : segment.members) out << " f" << id;
      out << "\";\n";
      for (int id : segment.members) {
        if (drawn.insert(id).second) out << "    f" << id << ";\n";
      }
      out << "  }\n";
    }
  }
  for (int id : graph.nodes()) {
    if (!drawn.contains(id)) out << "  f" << id << ";\n";
  }
  for (const Edge &edge : graph.edges()) {
    out << "  f" << edge.source << " -> f" << edge.target << " [label=\""
        << FormatNumber(edge.weight) << " " << PriorityClassName(edge.priority)
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace framesum
