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

// Shared test fixtures: data paths, the in-repo fixture lexicon, frame
// builders and seeded random generators.

#ifndef FRAMESUM_TESTS_TESTING_FIXTURES_H_
#define FRAMESUM_TESTS_TESTING_FIXTURES_H_

#include <filesystem>
#include <initializer_list>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "framesum/frame.h"
#include "framesum/similarity_graph.h"
#include "framesum/wordnet.h"

namespace framesum::testing {

std::filesystem::path DataDir();
std::filesystem::path FixtureWordNetDir();
const Lexicon &FixtureLexicon();

// Fixture synset ids, hand-copied from tests/data/wordnet.
inline constexpr SynsetId kEntity{Pos::kNoun, 1740};
inline constexpr SynsetId kPerson{Pos::kNoun, 7846};
inline constexpr SynsetId kPuppy{Pos::kNoun, 1322604};
inline constexpr SynsetId kCanine{Pos::kNoun, 2083346};
inline constexpr SynsetId kDog{Pos::kNoun, 2084071};
inline constexpr SynsetId kHelper{Pos::kNoun, 10180178};
inline constexpr SynsetId kHelp{Pos::kVerb, 2547586};
inline constexpr SynsetId kAssist{Pos::kVerb, 2548075};
inline constexpr SynsetId kAid{Pos::kVerb, 2548219};

// Lemma defaults to the lowercased text.
Token Tok(const std::string &text, const std::string &lemma = "",
          std::optional<PosHint> hint = std::nullopt);
Argument Arg(const std::string &label, std::vector<Token> tokens);
Frame MakeFrame(int frame_id, int sentence_index, Token verb,
                std::vector<Argument> args);
// Frame whose verb lemma is `verb` and whose ARG1 holds one token per noun.
Frame NounFrame(int frame_id, int sentence_index, const std::string &verb,
                const std::vector<std::string> &nouns);
// Pads sentences to cover every sentence_index and finalizes.
Document MakeDocument(std::vector<Frame> frames, int sentence_count = -1);

// Random frames over the fixture vocabulary plus out-of-lexicon words.
Frame RandomFrame(std::mt19937 &rng, int frame_id, int sentence_index);
Document RandomDocument(std::mt19937 &rng, int frames, int sentences);
// Random noun seed drawn from the fixture lexicon.
SynsetIdSet RandomNounSeed(std::mt19937 &rng, const Lexicon &lexicon);
SynsetIdSet RandomSeed(std::mt19937 &rng, const Lexicon &lexicon);

// Nodes 1..n; each earlier->later pair becomes an edge with `edge_prob`.
FrameGraph RandomGraph(std::mt19937 &rng, int nodes, double edge_prob);
// Document whose frames are 1..n, one per sentence.
Document LinearDocument(int frames);

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir &) = delete;
  TempDir &operator=(const TempDir &) = delete;

  const std::filesystem::path &path() const { return path_; }
  // Writes `text` to path() / name and returns the full path.
  std::filesystem::path Write(const std::string &name,
                              const std::string &text) const;

 private:
  std::filesystem::path path_;
};

std::string ReadFile(const std::filesystem::path &path);

}  // namespace framesum::testing

#endif  // FRAMESUM_TESTS_TESTING_FIXTURES_H_
