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

// Document and frame data model for PropBank-style semantic role labels, and
// readers for the JSON-lines and CoNLL-2005 props formats.
//
// Input documents are expected to be coreference-resolved and POS-annotated
// already; nothing here runs a tagger or an SRL model.

#ifndef FRAMESUM_FRAME_H_
#define FRAMESUM_FRAME_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "framesum/wordnet.h"

namespace framesum {

enum class PosHint { kNoun, kVerb, kProperNoun, kOther };

std::string_view PosHintName(PosHint hint);
// Accepts "noun", "verb", "proper_noun", "other".
std::optional<PosHint> ParsePosHint(std::string_view name);

struct Token {
  std::string text;
  std::string lemma;  // lowercase
  std::optional<PosHint> pos_hint;

  bool operator==(const Token &) const = default;
};

// ARG0..ARG5 or ARGM-<SUFFIX>.
bool IsValidArgLabel(std::string_view label);
bool IsModifierLabel(std::string_view label);

struct Argument {
  std::string label;
  std::vector<Token> tokens;

  bool is_modifier() const { return IsModifierLabel(label); }
  bool operator==(const Argument &) const = default;
};

struct Frame {
  int frame_id = 0;
  int sentence_index = 0;
  Token verb;
  std::vector<Argument> args;

  // Returns nullptr when the frame has no argument with this label.
  const Argument *FindArg(std::string_view label) const;
  bool operator==(const Frame &) const = default;
};

struct Document {
  std::vector<std::string> sentences;
  std::vector<Frame> frames;  // ordered by (sentence_index, frame_id)

  // Returns nullptr for an unknown id.
  const Frame *FindFrame(int frame_id) const;
  // Position of the frame in `frames`, or -1.
  int IndexOf(int frame_id) const;

  bool operator==(const Document &) const = default;
};

// Checks the frame invariants and sorts frames into document order.
// Throws ParseError describing the first violation.
void Finalize(Document *doc);

// One JSON object per line: a leading {"type":"document",...} record, then
// {"type":"frame",...} records. Throws ParseError with the line number.
Document ParseFramesJsonl(std::istream &in);
Document ParseFramesJsonl(std::string_view text);
void WriteFramesJsonl(const Document &doc, std::ostream &out);
std::string WriteFramesJsonl(const Document &doc);

// CoNLL-2005 style columns: word, lemma, target marker ("-" or the verb
// lemma), then one props column per target. Blank lines separate sentences.
// Frame ids are assigned 1, 2, ... in reading order.
Document ParseFramesConll(std::istream &in);
Document ParseFramesConll(std::string_view text);

// Lemmas of argument tokens that count as nouns: tokens hinted noun or
// proper_noun, and unhinted tokens whose lemma has a noun sense in
// `lexicon`. Order is preserved and duplicates are kept.
std::vector<std::string> NounCandidates(const Frame &frame,
                                        const Lexicon &lexicon);

}  // namespace framesum

#endif  // FRAMESUM_FRAME_H_
