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

#include "framesum/similarity_graph.h"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include "framesum/errors.h"

namespace framesum {

std::string_view PriorityClassName(PriorityClass c) {
  switch (c) {
    case PriorityClass::kClass1: return "Class1";
    case PriorityClass::kClass2: return "Class2";
    case PriorityClass::kClass3: return "Class3";
    case PriorityClass::kClass4: return "Class4";
  }
  return "Class4";
}

PriorityClass Classify(double a_score, double v_score) {
  if (a_score != 0 && v_score != 0) return PriorityClass::kClass1;
  if (a_score != 0) return PriorityClass::kClass2;
  if (v_score != 0) return PriorityClass::kClass3;
  return PriorityClass::kClass4;
}

namespace {

std::size_t LemmaOverlap(const std::set<std::string> &a,
                         const std::set<std::string> &b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace

PairScore ScorePair(const FrameSignature &si, const FrameSignature &sj,
                    double lexical_weight) {
  PairScore score;
  score.i = si.frame_id;
  score.j = sj.frame_id;
  score.a_score =
      static_cast<double>(IntersectionSize(si.noun_synsets, sj.noun_synsets)) +
      lexical_weight *
          static_cast<double>(LemmaOverlap(si.arg_lemmas, sj.arg_lemmas));
  const bool same_verb =
      !si.verb_lemma.empty() && si.verb_lemma == sj.verb_lemma;
  score.v_score =
      static_cast<double>(IntersectionSize(si.verb_synsets, sj.verb_synsets)) +
      (same_verb ? lexical_weight : 0.0);
  score.priority = Classify(score.a_score, score.v_score);
  return score;
}

// FrameGraph.

FrameGraph::FrameGraph(std::vector<int> nodes, std::vector<Edge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  for (std::size_t p = 0; p < nodes_.size(); ++p) {
    if (!adjacency_.emplace(nodes_[p], Adjacency{p, {}, 0}).second) {
      throw std::invalid_argument("duplicate graph node " +
                                  std::to_string(nodes_[p]));
    }
  }
  for (const Edge &edge : edges_) {
    auto source = adjacency_.find(edge.source);
    auto target = adjacency_.find(edge.target);
    if (source == adjacency_.end() || target == adjacency_.end()) {
      throw std::invalid_argument("edge endpoint is not a graph node");
    }
    source->second.out.push_back(edge.target);
    ++target->second.in_degree;
  }
  for (auto &[id, adj] : adjacency_) {
    std::sort(adj.out.begin(), adj.out.end(), [this](int a, int b) {
      return adjacency_.at(a).position < adjacency_.at(b).position;
    });
  }
}

bool FrameGraph::HasNode(int frame_id) const {
  return adjacency_.contains(frame_id);
}

const FrameGraph::Adjacency &FrameGraph::At(int frame_id) const {
  auto it = adjacency_.find(frame_id);
  if (it == adjacency_.end()) {
    throw std::invalid_argument("unknown frame_id " + std::to_string(frame_id));
  }
  return it->second;
}

const std::vector<int> &FrameGraph::OutTargets(int frame_id) const {
  return At(frame_id).out;
}

std::size_t FrameGraph::OutDegree(int frame_id) const {
  return At(frame_id).out.size();
}

std::size_t FrameGraph::InDegree(int frame_id) const {
  return At(frame_id).in_degree;
}

std::size_t FractionCount(double fraction, std::size_t n) {
  const double exact = fraction * static_cast<double>(n);
  return static_cast<std::size_t>(std::ceil(exact - 1e-9 * (1.0 + exact)));
}

FrameGraph BuildGraph(std::span<const FrameSignature> signatures,
                      double top_fraction, double lexical_weight) {
  if (!(top_fraction > 0 && top_fraction <= 1)) {
    throw ConfigError("rho must be in (0, 1], got " +
                      std::to_string(top_fraction));
  }
  std::vector<int> nodes;
  nodes.reserve(signatures.size());
  for (const FrameSignature &s : signatures) nodes.push_back(s.frame_id);

  std::vector<PairScore> linked;
  for (std::size_t a = 0; a < signatures.size(); ++a) {
    for (std::size_t b = a + 1; b < signatures.size(); ++b) {
      PairScore score = ScorePair(signatures[a], signatures[b], lexical_weight);
      if (score.priority != PriorityClass::kClass4) linked.push_back(score);
    }
  }
  std::sort(linked.begin(), linked.end(),
            [](const PairScore &x, const PairScore &y) {
              return std::make_tuple(x.priority, -x.weight(), x.i, x.j) <
                     std::make_tuple(y.priority, -y.weight(), y.i, y.j);
            });
  linked.resize(std::min(linked.size(),
                         FractionCount(top_fraction, linked.size())));

  std::vector<Edge> edges;
  edges.reserve(linked.size());
  for (const PairScore &p : linked) {
    edges.push_back(
        {p.i, p.j, p.weight(), p.a_score, p.v_score, p.priority});
  }
  return FrameGraph(std::move(nodes), std::move(edges));
}

}  // namespace framesum
