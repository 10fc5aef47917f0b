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

// In-memory WordNet lexicon built from the Princeton 3.x plain-text database
// files (index.noun, data.noun, index.verb, data.verb). Only nouns and verbs
// are loaded, and only the hypernym and hyponym/troponym pointers are kept.

#ifndef FRAMESUM_WORDNET_H_
#define FRAMESUM_WORDNET_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace framesum {

enum class Pos : std::uint8_t { kNoun = 0, kVerb = 1 };

// Single-letter code used by the database files ("n" or "v").
char PosCode(Pos pos);
std::string_view PosName(Pos pos);
// Accepts "n", "noun", "v", "verb". Throws ConfigError otherwise.
Pos ParsePos(std::string_view text);

struct SynsetId {
  Pos pos = Pos::kNoun;
  std::uint32_t offset = 0;

  auto operator<=>(const SynsetId &) const = default;
};

// Formats as "n:02084071".
std::string ToString(SynsetId id);

struct SynsetIdHash {
  std::size_t operator()(SynsetId id) const {
    return std::hash<std::uint64_t>()(
        (static_cast<std::uint64_t>(id.pos) << 32) | id.offset);
  }
};

// Sorted, duplicate-free set of synset ids.
class SynsetIdSet {
 public:
  using const_iterator = std::vector<SynsetId>::const_iterator;

  SynsetIdSet() = default;
  SynsetIdSet(std::initializer_list<SynsetId> ids);
  explicit SynsetIdSet(std::vector<SynsetId> ids);

  void Insert(SynsetId id);
  void InsertAll(const SynsetIdSet &other);
  bool Contains(SynsetId id) const;
  // True if every id of `other` is in this set.
  bool Includes(const SynsetIdSet &other) const;

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const_iterator begin() const { return ids_.begin(); }
  const_iterator end() const { return ids_.end(); }
  const std::vector<SynsetId> &ids() const { return ids_; }

  bool operator==(const SynsetIdSet &) const = default;

 private:
  std::vector<SynsetId> ids_;
};

SynsetIdSet Union(const SynsetIdSet &a, const SynsetIdSet &b);
SynsetIdSet Intersection(const SynsetIdSet &a, const SynsetIdSet &b);
std::size_t IntersectionSize(const SynsetIdSet &a, const SynsetIdSet &b);

enum class Relation : std::uint8_t {
  kHypernym,  // "@" and "@i"
  kHyponym,   // "~" and "~i"; troponymy for verbs
};

struct Pointer {
  Relation relation = Relation::kHypernym;
  SynsetId target;

  bool operator==(const Pointer &) const = default;
};

struct Synset {
  SynsetId id;
  std::vector<std::string> lemmas;  // lowercase, file order, no duplicates
  std::vector<Pointer> pointers;

  bool operator==(const Synset &) const = default;
};

// Lowercases and replaces spaces with underscores, matching the index files.
std::string NormalizeLemma(std::string_view lemma);

// Immutable lexicon. Build one with LexiconBuilder or LoadLexicon.
class Lexicon {
 public:
  Lexicon() = default;

  // Returns nullptr when the id is unknown.
  const Synset *Find(SynsetId id) const;
  bool Contains(SynsetId id) const { return Find(id) != nullptr; }

  // All sense offsets of a normalized lemma, in index order. Empty if absent.
  const std::vector<std::uint32_t> &Senses(Pos pos,
                                           std::string_view lemma) const;
  bool HasLemma(Pos pos, std::string_view lemma) const {
    return !Senses(pos, lemma).empty();
  }

  std::size_t synset_count(Pos pos) const;
  std::size_t index_size(Pos pos) const;

  // Deterministic views, sorted by offset / lemma.
  std::vector<SynsetId> SortedIds(Pos pos) const;
  std::vector<std::string> SortedLemmas(Pos pos) const;

  bool operator==(const Lexicon &other) const;

 private:
  friend class LexiconBuilder;

  struct PosTable {
    std::unordered_map<std::uint32_t, Synset> synsets;
    std::unordered_map<std::string, std::vector<std::uint32_t>> index;
  };

  const PosTable &table(Pos pos) const {
    return tables_[static_cast<int>(pos)];
  }

  PosTable tables_[2];
};

// Collects synsets and index entries, then validates cross references.
class LexiconBuilder {
 public:
  // Throws LexiconError on a duplicate offset or an empty lemma list.
  void AddSynset(Synset synset);
  // Appends one sense; `lemma` is normalized.
  void AddSense(Pos pos, std::string_view lemma, std::uint32_t offset);

  // Throws LexiconError if a pointer target or index offset does not resolve.
  Lexicon Build() &&;

 private:
  Lexicon lexicon_;
};

struct LexiconPaths {
  std::filesystem::path noun_index;
  std::filesystem::path noun_data;
  std::filesystem::path verb_index;
  std::filesystem::path verb_data;

  // index.noun, data.noun, index.verb, data.verb inside `dir`.
  static LexiconPaths InDirectory(const std::filesystem::path &dir);
};

// Parses the four database files. Throws LexiconError with file:line context
// on malformed input, missing files or dangling pointers.
Lexicon LoadLexicon(const LexiconPaths &paths);
Lexicon LoadLexicon(const std::filesystem::path &dir);

// All senses of `lemma` (normalized here) in the given part of speech.
SynsetIdSet SynsetsOf(const Lexicon &lexicon, std::string_view lemma, Pos pos);

// seed plus the direct hypernyms and hyponyms/troponyms of every seed synset.
// Throws LexiconError if a seed id is not in the lexicon.
SynsetIdSet ExpandOneLevel(const Lexicon &lexicon, const SynsetIdSet &seed);

// Applies ExpandOneLevel `depth` times. depth 0 returns the seed.
SynsetIdSet Expand(const Lexicon &lexicon, const SynsetIdSet &seed, int depth);

}  // namespace framesum

#endif  // FRAMESUM_WORDNET_H_
