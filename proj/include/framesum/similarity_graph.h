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

// Pairwise frame matching and the pruned frame graph.
//
// Two frames are compared on their argument synsets (A score) and their verb
// synsets (V score). A pair falls into one of four priority classes by which
// of the scores are non-zero:
//
//   Class1  A != 0, V != 0   similar agents doing similar things
//   Class2  A != 0, V == 0   similar agents, unrelated actions
//   Class3  A == 0, V != 0   similar actions, different agents
//   Class4  A == 0, V == 0   unrelated; never linked
//
// The graph keeps only the top fraction of linked pairs, ordered by class
// first and by A + V second.

#ifndef FRAMESUM_SIMILARITY_GRAPH_H_
#define FRAMESUM_SIMILARITY_GRAPH_H_

#include <cstddef>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "framesum/signature.h"

namespace framesum {

enum class PriorityClass { kClass1 = 1, kClass2 = 2, kClass3 = 3, kClass4 = 4 };

std::string_view PriorityClassName(PriorityClass c);

PriorityClass Classify(double a_score, double v_score);

struct PairScore {
  int i = 0;
  int j = 0;
  double a_score = 0;
  double v_score = 0;
  PriorityClass priority = PriorityClass::kClass4;

  double weight() const { return a_score + v_score; }
};

// a = |nouns_i ∩ nouns_j| + lexical_weight * |arg lemmas_i ∩ arg lemmas_j|
// v = |verbs_i ∩ verbs_j| + lexical_weight * [verb lemmas equal]
// Empty verb lemmas never count as equal.
PairScore ScorePair(const FrameSignature &si, const FrameSignature &sj,
                    double lexical_weight);

struct Edge {
  int source = 0;  // document-earlier frame
  int target = 0;
  double weight = 0;
  double a_score = 0;
  double v_score = 0;
  PriorityClass priority = PriorityClass::kClass4;
};

class FrameGraph {
 public:
  FrameGraph() = default;
  // `nodes` in document order. Every edge endpoint must be a node.
  FrameGraph(std::vector<int> nodes, std::vector<Edge> edges);

  const std::vector<int> &nodes() const { return nodes_; }
  // Edges in rank order (best first).
  const std::vector<Edge> &edges() const { return edges_; }

  bool HasNode(int frame_id) const;
  // Targets of the frame's out-edges, in document order of the target.
  const std::vector<int> &OutTargets(int frame_id) const;
  std::size_t OutDegree(int frame_id) const;
  std::size_t InDegree(int frame_id) const;

 private:
  struct Adjacency {
    std::size_t position = 0;
    std::vector<int> out;
    std::size_t in_degree = 0;
  };

  const Adjacency &At(int frame_id) const;

  std::vector<int> nodes_;
  std::vector<Edge> edges_;
  std::unordered_map<int, Adjacency> adjacency_;
};

// Number of items kept when taking fraction `f` of `n`: ceil(f * n), with a
// small tolerance so that e.g. 0.15 * 20 keeps 3 rather than 4.
std::size_t FractionCount(double fraction, std::size_t n);

// Scores every unordered pair, drops Class4, sorts by (class, -weight,
// (i, j)) and keeps the first FractionCount(top_fraction, P). Each kept pair
// becomes one edge from the earlier frame to the later one. Signatures must
// be in document order. Throws ConfigError unless 0 < top_fraction <= 1.
FrameGraph BuildGraph(std::span<const FrameSignature> signatures,
                      double top_fraction, double lexical_weight);

}  // namespace framesum

#endif  // FRAMESUM_SIMILARITY_GRAPH_H_
