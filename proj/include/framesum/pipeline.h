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

// End-to-end driver: ingest -> signatures -> graph -> segments -> centroids
// -> sentences -> optional evaluation. No stage is randomized, so equal
// inputs and configuration always give equal reports.

#ifndef FRAMESUM_PIPELINE_H_
#define FRAMESUM_PIPELINE_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "framesum/assembler.h"
#include "framesum/centroid.h"
#include "framesum/evaluator.h"
#include "framesum/frame.h"
#include "framesum/segmentation.h"
#include "framesum/signature.h"
#include "framesum/similarity_graph.h"
#include "framesum/wordnet.h"
#include "json.hpp"

namespace framesum {

struct PipelineConfig {
  std::string wordnet_dir;
  int expansion_depth = 1;
  double lexical_weight = 1.0;      // key "lambda"
  double top_fraction = 0.15;       // key "rho"
  double centroid_fraction = 0.2;   // key "phi"
  FeatureWeights weights;           // keys w_in, w_out, w_pos, w_len, w_ne
  bool merge_overlaps = false;
  bool keep_modifiers = false;

  // Sets one key from its text form. Throws ConfigError naming the key on an
  // unknown key or an unparsable value.
  void Set(std::string_view key, std::string_view value);
  // Throws ConfigError naming the first out-of-range key.
  void Validate() const;

  nlohmann::ordered_json ToJson() const;
};

// All keys accepted by PipelineConfig::Set, in documentation order.
const std::vector<std::string> &ConfigKeys();

// Applies a flat "key = value" file ('#' starts a comment) on top of
// `config`. Throws ConfigError with the line number.
void ApplyConfigFile(const std::filesystem::path &path, PipelineConfig *config);

// Loads the lexicon from config.wordnet_dir. Throws ConfigError if the
// directory is not set and LexiconError if it cannot be read.
Lexicon LoadConfiguredLexicon(const PipelineConfig &config);

enum class InputFormat { kJsonl, kConll };

// "jsonl" or "conll"; throws ConfigError otherwise.
InputFormat ParseInputFormat(std::string_view name);

// Throws ParseError if the file cannot be opened or parsed.
Document LoadDocument(const std::filesystem::path &path, InputFormat format);

struct StageTiming {
  std::string stage;
  double millis = 0;
};

struct RunCounts {
  std::size_t sentences = 0;  // N
  std::size_t frames = 0;     // M
  std::size_t edges = 0;
  std::size_t segments = 0;
  std::size_t centroids = 0;
};

// Everything a summarization run produced.
struct RunReport {
  Document document;
  std::vector<FrameSignature> signatures;
  FrameGraph graph;
  Segmentation segmentation;
  CentroidSelection selection;
  std::vector<GeneratedSentence> summary;
  std::optional<EvalReport> evaluation;
  std::vector<StageTiming> timing;

  RunCounts counts() const;
  // One generated sentence per line.
  std::string SummaryText() const;
};

struct ReportOptions {
  bool include_signatures = false;
  bool include_timing = true;
};

// JSON report. Timings live under the "timing" key only, so reports of two
// runs compare equal once that key is dropped.
nlohmann::ordered_json ReportToJson(const RunReport &report,
                                    const PipelineConfig &config,
                                    const Lexicon &lexicon,
                                    const ReportOptions &options = {});

// Runs every stage. When `reference` is given, the selected centroids are
// evaluated against its frames. Stage failures are rethrown as the same
// error kind with the stage name prepended.
RunReport Summarize(const PipelineConfig &config, const Lexicon &lexicon,
                    Document document, const Document *reference = nullptr);

RunReport RunSummarize(
    const PipelineConfig &config, const Lexicon &lexicon,
    const std::filesystem::path &frames_path, InputFormat format,
    const std::optional<std::filesystem::path> &reference_path = std::nullopt);

// Every frame of the system file is treated as a summary centroid.
EvalReport RunEvaluate(const PipelineConfig &config, const Lexicon &lexicon,
                       const std::filesystem::path &system_path,
                       const std::filesystem::path &reference_path,
                       InputFormat format);

enum class InspectTarget { kSignatures, kGraph, kSegments, kFeatures };

// "signatures", "graph", "segments" or "features"; throws ConfigError.
InspectTarget ParseInspectTarget(std::string_view name);

// DOT for kGraph, JSON text otherwise.
std::string Inspect(const PipelineConfig &config, const Lexicon &lexicon,
                    const Document &document, InspectTarget target);
std::string RunInspect(const PipelineConfig &config, const Lexicon &lexicon,
                       const std::filesystem::path &frames_path,
                       InputFormat format, InspectTarget target);

}  // namespace framesum

#endif  // FRAMESUM_PIPELINE_H_
