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

#ifndef FRAMESUM_SIGNATURE_H_
#define FRAMESUM_SIGNATURE_H_

#include <set>
#include <string>
#include <vector>

#include "framesum/frame.h"
#include "framesum/wordnet.h"
#include "json.hpp"

namespace framesum {

// What a frame means in WordNet terms: the expanded synsets of its argument
// nouns and of its verb, plus the raw lemmas for exact-word overlap.
struct FrameSignature {
  int frame_id = 0;
  SynsetIdSet noun_synsets;
  SynsetIdSet verb_synsets;
  std::set<std::string> arg_lemmas;
  std::string verb_lemma;

  bool operator==(const FrameSignature &) const = default;
};

// `depth` is the number of hypernym/hyponym levels to expand; the seed
// senses are always included.
FrameSignature BuildSignature(const Frame &frame, const Lexicon &lexicon,
                              int depth = 1);

std::vector<FrameSignature> BuildAllSignatures(const Document &doc,
                                               const Lexicon &lexicon,
                                               int depth = 1);

nlohmann::ordered_json SignatureToJson(const FrameSignature &signature,
                                       const Lexicon &lexicon);

}  // namespace framesum

#endif  // FRAMESUM_SIGNATURE_H_
