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

#ifndef FRAMESUM_ASSEMBLER_H_
#define FRAMESUM_ASSEMBLER_H_

#include <string>
#include <vector>

#include "framesum/centroid.h"
#include "framesum/frame.h"

namespace framesum {

struct GeneratedSentence {
  int frame_id = 0;
  std::string text;
  bool complete = false;  // ARG0, verb and ARG1 all present

  bool operator==(const GeneratedSentence &) const = default;
};

// Compresses a frame into "[ARG0] verb [ARG1] [ARG2]." Missing arguments are
// skipped; modifiers are dropped unless `keep_modifiers`, in which case they
// follow ARG2 in frame order. The first letter is uppercased and a period is
// added when the text does not already end in terminal punctuation. Throws
// std::invalid_argument for a frame without a verb.
GeneratedSentence Assemble(const Frame &frame, bool keep_modifiers = false);

// One sentence per selected centroid, in source order (sentence index, then
// frame id).
std::vector<GeneratedSentence> AssembleSummary(
    const CentroidSelection &selection, const Document &doc,
    bool keep_modifiers = false);

}  // namespace framesum

#endif  // FRAMESUM_ASSEMBLER_H_
