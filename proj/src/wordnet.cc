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

#include "framesum/wordnet.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <utility>

#include "framesum/errors.h"

namespace framesum {

char PosCode(Pos pos) { return pos == Pos::kNoun ? 'n' : 'v'; }

std::string_view PosName(Pos pos) {
  return pos == Pos::kNoun ? "noun" : "verb";
}

Pos ParsePos(std::string_view text) {
  if (text == "n" || text == "noun") return Pos::kNoun;
  if (text == "v" || text == "verb") return Pos::kVerb;
  throw ConfigError("unknown part of speech '" + std::string(text) +
                    "' (expected noun or verb)");
}

std::string ToString(SynsetId id) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%c:%08u", PosCode(id.pos), id.offset);
  return buf;
}

SynsetIdSet::SynsetIdSet(std::initializer_list<SynsetId> ids)
    : SynsetIdSet(std::vector<SynsetId>(ids)) {}

SynsetIdSet::SynsetIdSet(std::vector<SynsetId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

void SynsetIdSet::Insert(SynsetId id) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) ids_.insert(it, id);
}

void SynsetIdSet::InsertAll(const SynsetIdSet &other) {
  if (other.empty()) return;
  *this = Union(*this, other);
}

bool SynsetIdSet::Contains(SynsetId id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

bool SynsetIdSet::Includes(const SynsetIdSet &other) const {
  return std::includes(ids_.begin(), ids_.end(), other.ids_.begin(),
                       other.ids_.end());
}

SynsetIdSet Union(const SynsetIdSet &a, const SynsetIdSet &b) {
  std::vector<SynsetId> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return SynsetIdSet(std::move(out));
}

SynsetIdSet Intersection(const SynsetIdSet &a, const SynsetIdSet &b) {
  std::vector<SynsetId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return SynsetIdSet(std::move(out));
}

std::size_t IntersectionSize(const SynsetIdSet &a, const SynsetIdSet &b) {
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

std::string NormalizeLemma(std::string_view lemma) {
  std::string out(lemma);
  for (char &c : out) {
    if (c == ' ') {
      c = '_';
    } else {
      c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  return out;
}

// Lexicon.

const Synset *Lexicon::Find(SynsetId id) const {
  const auto &synsets = table(id.pos).synsets;
  auto it = synsets.find(id.offset);
  return it == synsets.end() ? nullptr : &it->second;
}

const std::vector<std::uint32_t> &Lexicon::Senses(
    Pos pos, std::string_view lemma) const {
  static const std::vector<std::uint32_t> kEmpty;
  const auto &index = table(pos).index;
  auto it = index.find(std::string(lemma));
  return it == index.end() ? kEmpty : it->second;
}

std::size_t Lexicon::synset_count(Pos pos) const {
  return table(pos).synsets.size();
}

std::size_t Lexicon::index_size(Pos pos) const {
  return table(pos).index.size();
}

std::vector<SynsetId> Lexicon::SortedIds(Pos pos) const {
  std::vector<SynsetId> ids;
  ids.reserve(synset_count(pos));
  for (const auto &[offset, synset] : table(pos).synsets) {
    ids.push_back(synset.id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<std::string> Lexicon::SortedLemmas(Pos pos) const {
  std::vector<std::string> lemmas;
  lemmas.reserve(index_size(pos));
  for (const auto &[lemma, offsets] : table(pos).index) {
    lemmas.push_back(lemma);
  }
  std::sort(lemmas.begin(), lemmas.end());
  return lemmas;
}

bool Lexicon::operator==(const Lexicon &other) const {
  for (int p = 0; p < 2; ++p) {
    if (tables_[p].synsets != other.tables_[p].synsets) return false;
    if (tables_[p].index != other.tables_[p].index) return false;
  }
  return true;
}

// LexiconBuilder.

void LexiconBuilder::AddSynset(Synset synset) {
  if (synset.lemmas.empty()) {
    throw LexiconError("synset " + ToString(synset.id) + " has no lemmas");
  }
  auto &synsets = lexicon_.tables_[static_cast<int>(synset.id.pos)].synsets;
  const SynsetId id = synset.id;
  if (!synsets.emplace(id.offset, std::move(synset)).second) {
    throw LexiconError("duplicate synset offset " + ToString(id));
  }
}

void LexiconBuilder::AddSense(Pos pos, std::string_view lemma,
                              std::uint32_t offset) {
  auto &offsets =
      lexicon_.tables_[static_cast<int>(pos)].index[NormalizeLemma(lemma)];
  if (std::find(offsets.begin(), offsets.end(), offset) == offsets.end()) {
    offsets.push_back(offset);
  }
}

Lexicon LexiconBuilder::Build() && {
  for (const auto &table : lexicon_.tables_) {
    for (const auto &[offset, synset] : table.synsets) {
      for (const Pointer &ptr : synset.pointers) {
        if (!lexicon_.Contains(ptr.target)) {
          throw LexiconError("dangling pointer from " + ToString(synset.id) +
                             " to " + ToString(ptr.target));
        }
      }
    }
  }
  for (Pos pos : {Pos::kNoun, Pos::kVerb}) {
    for (const auto &[lemma, offsets] : lexicon_.table(pos).index) {
      for (std::uint32_t offset : offsets) {
        if (!lexicon_.Contains({pos, offset})) {
          throw LexiconError("index entry '" + lemma + "' refers to missing " +
                             ToString({pos, offset}));
        }
      }
    }
  }
  return std::move(lexicon_);
}

// Database file parsing.

namespace {

class LineContext {
 public:
  LineContext(const std::filesystem::path &file, int line)
      : file_(file.filename().string()), line_(line) {}

  [[noreturn]] void Fail(std::string_view field,
                         std::string_view value) const {
    throw LexiconError(file_ + ":" + std::to_string(line_) + ": bad " +
                       std::string(field) + " '" + std::string(value) + "'");
  }

  [[noreturn]] void Fail(std::string_view message) const {
    throw LexiconError(file_ + ":" + std::to_string(line_) + ": " +
                       std::string(message));
  }

 private:
  std::string file_;
  int line_;
};

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\r')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\r') ++end;
    if (end > pos) fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

std::uint32_t ParseNumber(const LineContext &ctx, std::string_view field,
                          std::string_view value, int base) {
  std::uint32_t out = 0;
  const char *end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out, base);
  if (value.empty() || ec != std::errc() || ptr != end) ctx.Fail(field, value);
  return out;
}

// Cursor over the whitespace-separated fields of one line.
class FieldReader {
 public:
  FieldReader(const LineContext &ctx, std::vector<std::string_view> fields)
      : ctx_(ctx), fields_(std::move(fields)) {}

  std::string_view Next(std::string_view what) {
    if (next_ >= fields_.size()) ctx_.Fail("missing " + std::string(what));
    return fields_[next_++];
  }

  std::uint32_t NextNumber(std::string_view what, int base = 10) {
    return ParseNumber(ctx_, what, Next(what), base);
  }

 private:
  const LineContext &ctx_;
  std::vector<std::string_view> fields_;
  std::size_t next_ = 0;
};

bool IsHeader(std::string_view line) {
  return line.size() >= 2 && line[0] == ' ' && line[1] == ' ';
}

bool IsBlank(std::string_view line) {
  return line.find_first_not_of(" \r\t") == std::string_view::npos;
}

std::ifstream OpenOrThrow(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw LexiconError("cannot open " + path.string());
  return in;
}

std::string StripLexicalMarker(std::string_view word) {
  // Adjective syntactic markers like "(p)" never occur in noun/verb files,
  // but strip them anyway so a stray one does not become part of a lemma.
  auto paren = word.find('(');
  if (paren != std::string_view::npos && paren > 0 && word.back() == ')') {
    word = word.substr(0, paren);
  }
  return NormalizeLemma(word);
}

void ParseDataFile(const std::filesystem::path &path, Pos pos,
                   LexiconBuilder *builder) {
  std::ifstream in = OpenOrThrow(path);
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (IsHeader(line) || IsBlank(line)) continue;
    LineContext ctx(path, line_number);

    std::string_view body(line);
    auto bar = body.find('|');
    if (bar != std::string_view::npos) body = body.substr(0, bar);
    FieldReader reader(ctx, SplitFields(body));

    Synset synset;
    synset.id = {pos, reader.NextNumber("synset_offset")};
    reader.NextNumber("lex_filenum");
    std::string_view ss_type = reader.Next("ss_type");
    if (ss_type.size() != 1 || ss_type[0] != PosCode(pos)) {
      ctx.Fail("ss_type", ss_type);
    }
    std::uint32_t word_count = reader.NextNumber("w_cnt", 16);
    if (word_count == 0) ctx.Fail("w_cnt", "0");
    for (std::uint32_t w = 0; w < word_count; ++w) {
      std::string lemma = StripLexicalMarker(reader.Next("word"));
      reader.NextNumber("lex_id", 16);
      if (std::find(synset.lemmas.begin(), synset.lemmas.end(), lemma) ==
          synset.lemmas.end()) {
        synset.lemmas.push_back(std::move(lemma));
      }
    }
    std::uint32_t pointer_count = reader.NextNumber("p_cnt");
    for (std::uint32_t p = 0; p < pointer_count; ++p) {
      std::string_view symbol = reader.Next("pointer_symbol");
      std::uint32_t target_offset = reader.NextNumber("pointer_offset");
      std::string_view target_pos = reader.Next("pointer_pos");
      std::string_view source_target = reader.Next("source/target");
      if (source_target.size() != 4) ctx.Fail("source/target", source_target);
      ParseNumber(ctx, "source/target", source_target, 16);

      Relation relation;
      if (symbol == "@" || symbol == "@i") {
        relation = Relation::kHypernym;
      } else if (symbol == "~" || symbol == "~i") {
        relation = Relation::kHyponym;
      } else {
        continue;
      }
      if (target_pos != "n" && target_pos != "v") {
        ctx.Fail("pointer_pos", target_pos);
      }
      synset.pointers.push_back(
          {relation, {ParsePos(target_pos), target_offset}});
    }
    builder->AddSynset(std::move(synset));
  }
}

void ParseIndexFile(const std::filesystem::path &path, Pos pos,
                    LexiconBuilder *builder) {
  std::ifstream in = OpenOrThrow(path);
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (IsHeader(line) || IsBlank(line)) continue;
    LineContext ctx(path, line_number);
    FieldReader reader(ctx, SplitFields(line));

    std::string_view lemma = reader.Next("lemma");
    std::string_view pos_field = reader.Next("pos");
    if (pos_field.size() != 1 || pos_field[0] != PosCode(pos)) {
      ctx.Fail("pos", pos_field);
    }
    std::uint32_t synset_count = reader.NextNumber("synset_cnt");
    std::uint32_t pointer_count = reader.NextNumber("p_cnt");
    for (std::uint32_t p = 0; p < pointer_count; ++p) {
      reader.Next("ptr_symbol");
    }
    reader.NextNumber("sense_cnt");
    reader.NextNumber("tagsense_cnt");
    for (std::uint32_t s = 0; s < synset_count; ++s) {
      builder->AddSense(pos, lemma, reader.NextNumber("synset_offset"));
    }
  }
}

}  // namespace

LexiconPaths LexiconPaths::InDirectory(const std::filesystem::path &dir) {
  return {dir / "index.noun", dir / "data.noun", dir / "index.verb",
          dir / "data.verb"};
}

Lexicon LoadLexicon(const LexiconPaths &paths) {
  LexiconBuilder builder;
  ParseDataFile(paths.noun_data, Pos::kNoun, &builder);
  ParseDataFile(paths.verb_data, Pos::kVerb, &builder);
  ParseIndexFile(paths.noun_index, Pos::kNoun, &builder);
  ParseIndexFile(paths.verb_index, Pos::kVerb, &builder);
  return std::move(builder).Build();
}

Lexicon LoadLexicon(const std::filesystem::path &dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw LexiconError("WordNet directory not found: " + dir.string());
  }
  return LoadLexicon(LexiconPaths::InDirectory(dir));
}

SynsetIdSet SynsetsOf(const Lexicon &lexicon, std::string_view lemma,
                      Pos pos) {
  std::vector<SynsetId> ids;
  for (std::uint32_t offset : lexicon.Senses(pos, NormalizeLemma(lemma))) {
    ids.push_back({pos, offset});
  }
  return SynsetIdSet(std::move(ids));
}

SynsetIdSet ExpandOneLevel(const Lexicon &lexicon, const SynsetIdSet &seed) {
  std::vector<SynsetId> out(seed.begin(), seed.end());
  for (SynsetId id : seed) {
    const Synset *synset = lexicon.Find(id);
    if (synset == nullptr) {
      throw LexiconError("unknown seed synset " + ToString(id));
    }
    for (const Pointer &ptr : synset->pointers) out.push_back(ptr.target);
  }
  return SynsetIdSet(std::move(out));
}

SynsetIdSet Expand(const Lexicon &lexicon, const SynsetIdSet &seed,
                   int depth) {
  SynsetIdSet current = seed;
  for (int level = 0; level < depth; ++level) {
    SynsetIdSet next = ExpandOneLevel(lexicon, current);
    if (next.size() == current.size()) break;
    current = std::move(next);
  }
  return current;
}

}  // namespace framesum
