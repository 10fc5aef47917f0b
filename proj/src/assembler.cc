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

#include "framesum/assembler.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace framesum {

namespace {

void AppendTokens(const Argument *arg, std::string *text) {
  if (arg == nullptr) return;
  for (const Token &token : arg->tokens) {
    if (!text->empty()) *text += ' ';
    *text += token.text;
  }
}

}  // namespace

GeneratedSentence Assemble(const Frame &frame, bool keep_modifiers) {
  if (frame.verb.text.empty()) {
    throw std::invalid_argument("frame " + std::to_string(frame.frame_id) +
                                " has no verb");
  }
  GeneratedSentence sentence;
  sentence.frame_id = frame.frame_id;

  const Argument *agent = frame.FindArg("ARG0");
  const Argument *theme = frame.FindArg("ARG1");
  std::string text;
  AppendTokens(agent, &text);
  if (!text.empty()) text += ' ';
  text += frame.verb.text;
  AppendTokens(theme, &text);
  AppendTokens(frame.FindArg("ARG2"), &text);
  if (keep_modifiers) {
    for (const Argument &arg : frame.args) {
      if (arg.is_modifier()) AppendTokens(&arg, &text);
    }
  }

  text[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  const char last = text.back();
  if (last != '.' && last != '!' && last != '?') text += '.';

  sentence.text = std::move(text);
  sentence.complete = agent != nullptr && theme != nullptr;
  return sentence;
}

std::vector<GeneratedSentence> AssembleSummary(
    const CentroidSelection &selection, const Document &doc,
    bool keep_modifiers) {
  std::vector<const Frame *> frames;
  for (int id : selection.FrameIds()) {
    const Frame *frame = doc.FindFrame(id);
    if (frame == nullptr) {
      throw std::invalid_argument("selected frame " + std::to_string(id) +
                                  " is not in the document");
    }
    frames.push_back(frame);
  }
  std::sort(frames.begin(), frames.end(), [](const Frame *a, const Frame *b) {
    return std::pair(a->sentence_index, a->frame_id) <
           std::pair(b->sentence_index, b->frame_id);
  });
  std::vector<GeneratedSentence> summary;
  summary.reserve(frames.size());
  for (const Frame *frame : frames) {
    summary.push_back(Assemble(*frame, keep_modifiers));
  }
  return summary;
}

}  // namespace framesum
