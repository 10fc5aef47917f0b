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

#include "framesum/frame.h"

#include <algorithm>
#include <cctype>
#include <istream>
#include <set>
#include <sstream>
#include <utility>

#include "framesum/errors.h"
#include "json.hpp"

namespace framesum {

using json = nlohmann::ordered_json;

std::string_view PosHintName(PosHint hint) {
  switch (hint) {
    case PosHint::kNoun: return "noun";
    case PosHint::kVerb: return "verb";
    case PosHint::kProperNoun: return "proper_noun";
    case PosHint::kOther: return "other";
  }
  return "other";
}

std::optional<PosHint> ParsePosHint(std::string_view name) {
  if (name == "noun") return PosHint::kNoun;
  if (name == "verb") return PosHint::kVerb;
  if (name == "proper_noun") return PosHint::kProperNoun;
  if (name == "other") return PosHint::kOther;
  return std::nullopt;
}

bool IsModifierLabel(std::string_view label) {
  return label.starts_with("ARGM-");
}

bool IsValidArgLabel(std::string_view label) {
  if (label.size() == 4 && label.starts_with("ARG")) {
    return label[3] >= '0' && label[3] <= '5';
  }
  if (!IsModifierLabel(label) || label.size() == 5) return false;
  return std::all_of(label.begin() + 5, label.end(), [](char c) {
    return std::isupper(static_cast<unsigned char>(c)) ||
           std::isdigit(static_cast<unsigned char>(c));
  });
}

const Argument *Frame::FindArg(std::string_view label) const {
  for (const Argument &arg : args) {
    if (arg.label == label) return &arg;
  }
  return nullptr;
}

const Frame *Document::FindFrame(int frame_id) const {
  int index = IndexOf(frame_id);
  return index < 0 ? nullptr : &frames[index];
}

int Document::IndexOf(int frame_id) const {
  for (std::size_t i = 0; i < frames.size(); ++i) {
    if (frames[i].frame_id == frame_id) return static_cast<int>(i);
  }
  return -1;
}

namespace {

std::string Lowercase(std::string_view text) {
  std::string out(text);
  for (char &c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

void CheckToken(const Token &token, const std::string &where) {
  if (token.text.empty()) throw ParseError(where + ": empty token text");
  if (token.lemma.empty()) throw ParseError(where + ": empty token lemma");
}

}  // namespace

void Finalize(Document *doc) {
  std::set<int> ids;
  for (const Frame &frame : doc->frames) {
    const std::string where = "frame " + std::to_string(frame.frame_id);
    if (!ids.insert(frame.frame_id).second) {
      throw ParseError("duplicate frame_id " + std::to_string(frame.frame_id));
    }
    if (frame.sentence_index < 0 ||
        frame.sentence_index >= static_cast<int>(doc->sentences.size())) {
      throw ParseError(where + ": sentence_index " +
                       std::to_string(frame.sentence_index) +
                       " out of range for " +
                       std::to_string(doc->sentences.size()) + " sentences");
    }
    CheckToken(frame.verb, where + " verb");
    std::set<std::string> numbered;
    for (const Argument &arg : frame.args) {
      if (!IsValidArgLabel(arg.label)) {
        throw ParseError(where + ": unknown argument label '" + arg.label +
                         "'");
      }
      if (!arg.is_modifier() && !numbered.insert(arg.label).second) {
        throw ParseError(where + ": repeated argument " + arg.label);
      }
      if (arg.tokens.empty()) {
        throw ParseError(where + ": argument " + arg.label + " has no tokens");
      }
      for (const Token &token : arg.tokens) CheckToken(token, where);
    }
  }
  std::stable_sort(doc->frames.begin(), doc->frames.end(),
                   [](const Frame &a, const Frame &b) {
                     return std::pair(a.sentence_index, a.frame_id) <
                            std::pair(b.sentence_index, b.frame_id);
                   });
}

// JSON lines.

namespace {

// Drops the "[json.exception.type_error.302] " prefix.
std::string JsonMessage(const json::exception &e) {
  std::string_view text = e.what();
  if (text.starts_with("[json.exception.")) {
    const auto close = text.find("] ");
    if (close != std::string_view::npos) text.remove_prefix(close + 2);
  }
  return std::string(text);
}

Token TokenFromJson(const json &j) {
  Token token;
  token.text = j.at("text").get<std::string>();
  token.lemma = Lowercase(j.at("lemma").get<std::string>());
  if (auto it = j.find("pos"); it != j.end() && !it->is_null()) {
    const std::string name = it->get<std::string>();
    token.pos_hint = ParsePosHint(name);
    if (!token.pos_hint) throw ParseError("unknown pos hint '" + name + "'");
  }
  return token;
}

json TokenToJson(const Token &token) {
  json j = {{"text", token.text}, {"lemma", token.lemma}};
  if (token.pos_hint) j["pos"] = PosHintName(*token.pos_hint);
  return j;
}

Frame FrameFromJson(const json &j) {
  Frame frame;
  frame.frame_id = j.at("frame_id").get<int>();
  frame.sentence_index = j.at("sentence_index").get<int>();
  frame.verb = TokenFromJson(j.at("verb"));
  for (const json &a : j.at("args")) {
    Argument arg;
    arg.label = a.at("label").get<std::string>();
    if (!IsValidArgLabel(arg.label)) {
      throw ParseError("unknown argument label '" + arg.label + "'");
    }
    for (const json &t : a.at("tokens")) arg.tokens.push_back(TokenFromJson(t));
    frame.args.push_back(std::move(arg));
  }
  return frame;
}

}  // namespace

Document ParseFramesJsonl(std::istream &in) {
  Document doc;
  bool have_document = false;
  std::set<int> ids;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = "line " + std::to_string(line_number);
    try {
      json record = json::parse(line);
      const std::string type = record.at("type").get<std::string>();
      if (type == "document") {
        if (have_document) throw ParseError("second document record");
        doc.sentences = record.at("sentences").get<std::vector<std::string>>();
        have_document = true;
      } else if (type == "frame") {
        if (!have_document) throw ParseError("missing document record");
        Frame frame = FrameFromJson(record);
        if (!ids.insert(frame.frame_id).second) {
          throw ParseError("duplicate frame_id " +
                           std::to_string(frame.frame_id));
        }
        doc.frames.push_back(std::move(frame));
      } else {
        throw ParseError("unknown record type '" + type + "'");
      }
    } catch (const json::exception &e) {
      throw ParseError(where + ": " + JsonMessage(e));
    } catch (const ParseError &e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (!have_document) throw ParseError("missing document record");
  Finalize(&doc);
  return doc;
}

Document ParseFramesJsonl(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseFramesJsonl(in);
}

void WriteFramesJsonl(const Document &doc, std::ostream &out) {
  json header = {{"type", "document"}, {"sentences", doc.sentences}};
  out << header.dump() << "\n";
  for (const Frame &frame : doc.frames) {
    json args = json::array();
    for (const Argument &arg : frame.args) {
      json tokens = json::array();
      for (const Token &token : arg.tokens) tokens.push_back(TokenToJson(token));
      args.push_back({{"label", arg.label}, {"tokens", std::move(tokens)}});
    }
    json record = {{"type", "frame"},
                   {"frame_id", frame.frame_id},
                   {"sentence_index", frame.sentence_index},
                   {"verb", TokenToJson(frame.verb)},
                   {"args", std::move(args)}};
    out << record.dump() << "\n";
  }
}

std::string WriteFramesJsonl(const Document &doc) {
  std::ostringstream out;
  WriteFramesJsonl(doc, out);
  return out.str();
}

// CoNLL props columns.

namespace {

struct Span {
  std::string label;
  int begin;
  int end;  // inclusive
};

std::string NormalizeConllLabel(const std::string &label) {
  // SENNA and the CoNLL-2005 data write A0 / AM-TMP for ARG0 / ARGM-TMP.
  if (label.size() == 2 && label[0] == 'A' &&
      std::isdigit(static_cast<unsigned char>(label[1]))) {
    return "ARG" + label.substr(1);
  }
  if (label.starts_with("AM-")) return "ARGM-" + label.substr(3);
  return label;
}

std::vector<Span> ParsePropsColumn(const std::vector<std::vector<std::string>>
                                       &rows,
                                   std::size_t column,
                                   const std::string &where) {
  std::vector<Span> spans;
  std::vector<std::pair<std::string, int>> open;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string &cell = rows[r][column];
    std::size_t i = 0;
    while (i < cell.size()) {
      char c = cell[i];
      if (c == '(') {
        std::size_t end = cell.find_first_of("*()", i + 1);
        if (end == std::string::npos) end = cell.size();
        open.emplace_back(cell.substr(i + 1, end - i - 1), static_cast<int>(r));
        i = end;
      } else if (c == ')') {
        if (open.empty()) {
          throw ParseError(where + ": unbalanced ')' in props column " +
                           std::to_string(column - 2) + " at token " +
                           std::to_string(r + 1));
        }
        spans.push_back({open.back().first, open.back().second,
                         static_cast<int>(r)});
        open.pop_back();
        ++i;
      } else if (c == '*') {
        ++i;
      } else {
        throw ParseError(where + ": unexpected '" + std::string(1, c) +
                         "' in props cell '" + cell + "'");
      }
    }
  }
  if (!open.empty()) {
    throw ParseError(where + ": unclosed span (" + open.back().first +
                     " in props column " + std::to_string(column - 2));
  }
  std::sort(spans.begin(), spans.end(), [](const Span &a, const Span &b) {
    return a.begin < b.begin;
  });
  return spans;
}

Token ConllToken(const std::vector<std::string> &row) {
  Token token;
  token.text = row[0];
  token.lemma = (row[1] == "-" || row[1] == "_") ? Lowercase(row[0])
                                                 : Lowercase(row[1]);
  return token;
}

void ConvertSentence(const std::vector<std::vector<std::string>> &rows,
                     int first_line, Document *doc, int *next_frame_id) {
  const int sentence_index = static_cast<int>(doc->sentences.size());
  const std::string where = "sentence " + std::to_string(sentence_index) +
                            " (line " + std::to_string(first_line) + ")";
  const std::size_t columns = rows.front().size();
  if (columns < 3) {
    throw ParseError(where + ": expected at least 3 columns, got " +
                     std::to_string(columns));
  }
  std::string text;
  std::vector<int> targets;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != columns) {
      throw ParseError(where + ": ragged columns at token " +
                       std::to_string(r + 1) + " (" +
                       std::to_string(rows[r].size()) + " vs " +
                       std::to_string(columns) + ")");
    }
    if (r > 0) text += ' ';
    text += rows[r][0];
    if (rows[r][2] != "-") targets.push_back(static_cast<int>(r));
  }
  const std::size_t props = columns - 3;
  if (targets.size() != props) {
    throw ParseError(where + ": " + std::to_string(targets.size()) +
                     " target verbs but " + std::to_string(props) +
                     " props columns");
  }
  doc->sentences.push_back(std::move(text));

  for (std::size_t k = 0; k < props; ++k) {
    std::vector<Span> spans = ParsePropsColumn(rows, k + 3, where);
    Frame frame;
    frame.frame_id = (*next_frame_id)++;
    frame.sentence_index = sentence_index;
    const Span *verb_span = nullptr;
    for (const Span &span : spans) {
      if (span.label == "V") {
        verb_span = &span;
        continue;
      }
      Argument arg;
      arg.label = NormalizeConllLabel(span.label);
      if (!IsValidArgLabel(arg.label)) {
        throw ParseError(where + ": unknown argument label '" + span.label +
                         "'");
      }
      for (int r = span.begin; r <= span.end; ++r) {
        arg.tokens.push_back(ConllToken(rows[r]));
      }
      frame.args.push_back(std::move(arg));
    }
    if (verb_span == nullptr) {
      throw ParseError(where + ": props column " + std::to_string(k + 1) +
                       " has no (V*) span");
    }
    int verb_row = targets[k];
    if (verb_row < verb_span->begin || verb_row > verb_span->end) {
      verb_row = verb_span->begin;
    }
    frame.verb.text = rows[verb_row][0];
    const std::string &marker = rows[verb_row][2];
    frame.verb.lemma = marker != "-" ? Lowercase(marker)
                                     : ConllToken(rows[verb_row]).lemma;
    doc->frames.push_back(std::move(frame));
  }
}

}  // namespace

Document ParseFramesConll(std::istream &in) {
  Document doc;
  int next_frame_id = 1;
  std::vector<std::vector<std::string>> rows;
  int first_line = 0;
  int line_number = 0;
  std::string line;
  auto flush = [&] {
    if (!rows.empty()) ConvertSentence(rows, first_line, &doc, &next_frame_id);
    rows.clear();
  };
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream fields(line);
    std::vector<std::string> row;
    for (std::string field; fields >> field;) row.push_back(std::move(field));
    if (row.empty()) {
      flush();
      continue;
    }
    if (rows.empty()) first_line = line_number;
    rows.push_back(std::move(row));
  }
  flush();
  Finalize(&doc);
  return doc;
}

Document ParseFramesConll(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseFramesConll(in);
}

std::vector<std::string> NounCandidates(const Frame &frame,
                                        const Lexicon &lexicon) {
  std::vector<std::string> lemmas;
  for (const Argument &arg : frame.args) {
    for (const Token &token : arg.tokens) {
      bool noun;
      if (token.pos_hint) {
        noun = *token.pos_hint == PosHint::kNoun ||
               *token.pos_hint == PosHint::kProperNoun;
      } else {
        noun = lexicon.HasLemma(Pos::kNoun, NormalizeLemma(token.lemma));
      }
      if (noun) lemmas.push_back(token.lemma);
    }
  }
  return lemmas;
}

}  // namespace framesum
