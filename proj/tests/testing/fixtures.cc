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

#include "testing/fixtures.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <unistd.h>

namespace framesum::testing {

std::filesystem::path DataDir() { return FRAMESUM_TEST_DATA_DIR; }

std::filesystem::path FixtureWordNetDir() { return DataDir() / "wordnet"; }

const Lexicon &FixtureLexicon() {
  static const Lexicon *lexicon = new Lexicon(LoadLexicon(FixtureWordNetDir()));
  return *lexicon;
}

Token Tok(const std::string &text, const std::string &lemma,
          std::optional<PosHint> hint) {
  Token token;
  token.text = text;
  token.lemma = lemma.empty() ? NormalizeLemma(text) : lemma;
  token.pos_hint = hint;
  return token;
}

Argument Arg(const std::string &label, std::vector<Token> tokens) {
  return {label, std::move(tokens)};
}

Frame MakeFrame(int frame_id, int sentence_index, Token verb,
                std::vector<Argument> args) {
  Frame frame;
  frame.frame_id = frame_id;
  frame.sentence_index = sentence_index;
  frame.verb = std::move(verb);
  frame.args = std::move(args);
  return frame;
}

Frame NounFrame(int frame_id, int sentence_index, const std::string &verb,
                const std::vector<std::string> &nouns) {
  std::vector<Argument> args;
  if (!nouns.empty()) {
    std::vector<Token> tokens;
    for (const std::string &noun : nouns) tokens.push_back(Tok(noun));
    args.push_back(Arg("ARG1", std::move(tokens)));
  }
  return MakeFrame(frame_id, sentence_index, Tok(verb), std::move(args));
}

Document MakeDocument(std::vector<Frame> frames, int sentence_count) {
  Document doc;
  int needed = sentence_count;
  for (const Frame &frame : frames) {
    needed = std::max(needed, frame.sentence_index + 1);
  }
  for (int s = 0; s < needed; ++s) {
    doc.sentences.push_back("sentence " + std::to_string(s));
  }
  doc.frames = std::move(frames);
  Finalize(&doc);
  return doc;
}

namespace {

const std::vector<std::string> kNouns = {"entity", "canine", "dog",   "puppy",
                                         "person", "helper", "house", "river"};
const std::vector<std::string> kVerbs = {"help", "assist", "aid", "run",
                                         "sing"};
const std::vector<std::string> kNames = {"John", "Mary", "Bob"};
const std::vector<std::string> kFunction = {"the", "a", "quickly", "in"};
const std::vector<std::string> kLabels = {"ARG0", "ARG1", "ARG2", "ARG3",
                                          "ARGM-TMP", "ARGM-LOC"};

template <typename T>
const T &Pick(std::mt19937 &rng, const std::vector<T> &items) {
  std::uniform_int_distribution<std::size_t> dist(0, items.size() - 1);
  return items[dist(rng)];
}

Token RandomToken(std::mt19937 &rng) {
  std::uniform_int_distribution<int> kind(0, 5);
  switch (kind(rng)) {
    case 0:
    case 1:
    case 2: return Tok(Pick(rng, kNouns));
    case 3: return Tok(Pick(rng, kNames), "", PosHint::kProperNoun);
    case 4: return Tok(Pick(rng, kNouns), "", PosHint::kNoun);
    default: return Tok(Pick(rng, kFunction));
  }
}

}  // namespace

Frame RandomFrame(std::mt19937 &rng, int frame_id, int sentence_index) {
  const std::string &verb = Pick(rng, kVerbs);
  Frame frame = MakeFrame(frame_id, sentence_index, Tok(verb + "ed", verb), {});
  std::bernoulli_distribution present(0.6);
  std::uniform_int_distribution<int> length(1, 3);
  for (const std::string &label : kLabels) {
    if (!present(rng)) continue;
    std::vector<Token> tokens;
    const int n = length(rng);
    for (int t = 0; t < n; ++t) tokens.push_back(RandomToken(rng));
    frame.args.push_back(Arg(label, std::move(tokens)));
  }
  return frame;
}

Document RandomDocument(std::mt19937 &rng, int frames, int sentences) {
  std::vector<Frame> out;
  std::uniform_int_distribution<int> sentence(0, std::max(0, sentences - 1));
  for (int id = 1; id <= frames; ++id) {
    out.push_back(RandomFrame(rng, id, sentence(rng)));
  }
  return MakeDocument(std::move(out), sentences);
}

SynsetIdSet RandomNounSeed(std::mt19937 &rng, const Lexicon &lexicon) {
  const std::vector<SynsetId> ids = lexicon.SortedIds(Pos::kNoun);
  std::bernoulli_distribution take(0.3);
  SynsetIdSet seed;
  for (SynsetId id : ids) {
    if (take(rng)) seed.Insert(id);
  }
  return seed;
}

SynsetIdSet RandomSeed(std::mt19937 &rng, const Lexicon &lexicon) {
  SynsetIdSet seed = RandomNounSeed(rng, lexicon);
  std::bernoulli_distribution take(0.3);
  for (SynsetId id : lexicon.SortedIds(Pos::kVerb)) {
    if (take(rng)) seed.Insert(id);
  }
  return seed;
}

FrameGraph RandomGraph(std::mt19937 &rng, int nodes, double edge_prob) {
  std::vector<int> ids;
  for (int id = 1; id <= nodes; ++id) ids.push_back(id);
  std::bernoulli_distribution link(edge_prob);
  std::uniform_int_distribution<int> weight(1, 6);
  std::vector<Edge> edges;
  for (int a = 1; a <= nodes; ++a) {
    for (int b = a + 1; b <= nodes; ++b) {
      if (!link(rng)) continue;
      const double w = weight(rng);
      edges.push_back({a, b, w, w, 0, PriorityClass::kClass2});
    }
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return FrameGraph(std::move(ids), std::move(edges));
}

Document LinearDocument(int frames) {
  std::vector<Frame> out;
  for (int id = 1; id <= frames; ++id) {
    out.push_back(NounFrame(id, id - 1, "help", {"dog"}));
  }
  return MakeDocument(std::move(out));
}

TempDir::TempDir() {
  static int counter = 0;
  path_ = std::filesystem::temp_directory_path() /
          ("framesum_test_" + std::to_string(::getpid()) + "_" +
           std::to_string(counter++));
  std::filesystem::remove_all(path_);
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ignored;
  std::filesystem::remove_all(path_, ignored);
}

std::filesystem::path TempDir::Write(const std::string &name,
                                     const std::string &text) const {
  const std::filesystem::path path = path_ / name;
  std::ofstream out(path, std::ios::binary);
  out << text;
  return path;
}

std::string ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace framesum::testing
