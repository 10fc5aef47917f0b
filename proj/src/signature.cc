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

#include "framesum/signature.h"

namespace framesum {

FrameSignature BuildSignature(const Frame &frame, const Lexicon &lexicon,
                              int depth) {
  FrameSignature signature;
  signature.frame_id = frame.frame_id;
  signature.verb_lemma = frame.verb.lemma;

  SynsetIdSet noun_seed;
  for (const std::string &lemma : NounCandidates(frame, lexicon)) {
    noun_seed.InsertAll(SynsetsOf(lexicon, lemma, Pos::kNoun));
    signature.arg_lemmas.insert(lemma);
  }
  signature.noun_synsets = Expand(lexicon, noun_seed, depth);
  signature.verb_synsets =
      Expand(lexicon, SynsetsOf(lexicon, frame.verb.lemma, Pos::kVerb), depth);
  return signature;
}

std::vector<FrameSignature> BuildAllSignatures(const Document &doc,
                                               const Lexicon &lexicon,
                                               int depth) {
  std::vector<FrameSignature> signatures;
  signatures.reserve(doc.frames.size());
  for (const Frame &frame : doc.frames) {
    signatures.push_back(BuildSignature(frame, lexicon, depth));
  }
  return signatures;
}

namespace {

nlohmann::ordered_json SynsetsToJson(const SynsetIdSet &ids,
                                     const Lexicon &lexicon) {
  auto out = nlohmann::ordered_json::array();
  for (SynsetId id : ids) {
    nlohmann::ordered_json entry = {{"id", ToString(id)}};
    if (const Synset *synset = lexicon.Find(id)) {
      entry["lemmas"] = synset->lemmas;
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace

nlohmann::ordered_json SignatureToJson(const FrameSignature &signature,
                                       const Lexicon &lexicon) {
  return {{"frame_id", signature.frame_id},
          {"verb_lemma", signature.verb_lemma},
          {"arg_lemmas", signature.arg_lemmas},
          {"noun_synsets", SynsetsToJson(signature.noun_synsets, lexicon)},
          {"verb_synsets", SynsetsToJson(signature.verb_synsets, lexicon)}};
}

}  // namespace framesum
