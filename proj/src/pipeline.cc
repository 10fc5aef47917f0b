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

#include "framesum/pipeline.h"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <utility>

#include "framesum/dot_writer.h"
#include "framesum/errors.h"

namespace framesum {

using ordered_json = nlohmann::ordered_json;

// Configuration.

namespace {

double ParseDouble(std::string_view key, std::string_view value) {
  const std::string text(value);
  char *end = nullptr;
  const double out = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw ConfigError("config key '" + std::string(key) +
                      "': not a number: '" + text + "'");
  }
  return out;
}

int ParseInt(std::string_view key, std::string_view value) {
  const double out = ParseDouble(key, value);
  if (out != std::floor(out) || std::fabs(out) > 1e9) {
    throw ConfigError("config key '" + std::string(key) +
                      "': not an integer: '" + std::string(value) + "'");
  }
  return static_cast<int>(out);
}

bool ParseBool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") {
    return true;
  }
  if (value == "false" || value == "0" || value == "no" || value == "off") {
    return false;
  }
  throw ConfigError("config key '" + std::string(key) + "': not a boolean: '" +
                    std::string(value) + "'");
}

std::string_view Trim(std::string_view text) {
  const auto begin = text.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = text.find_last_not_of(" \t\r");
  return text.substr(begin, end - begin + 1);
}

void RequireFraction(std::string_view key, double value) {
  if (!(value > 0 && value <= 1)) {
    throw ConfigError("config key '" + std::string(key) +
                      "' must be in (0, 1], got " + FormatNumber(value));
  }
}

}  // namespace

const std::vector<std::string> &ConfigKeys() {
  static const std::vector<std::string> kKeys = {
      "wordnet_dir", "expansion_depth", "lambda", "rho",
      "phi",         "w_in",            "w_out",  "w_pos",
      "w_len",       "w_ne",            "merge_overlaps",
      "keep_modifiers"};
  return kKeys;
}

void PipelineConfig::Set(std::string_view key, std::string_view value) {
  if (key == "wordnet_dir") {
    wordnet_dir = std::string(value);
  } else if (key == "expansion_depth") {
    expansion_depth = ParseInt(key, value);
  } else if (key == "lambda") {
    lexical_weight = ParseDouble(key, value);
  } else if (key == "rho") {
    top_fraction = ParseDouble(key, value);
  } else if (key == "phi") {
    centroid_fraction = ParseDouble(key, value);
  } else if (key == "w_in") {
    weights.in_degree = ParseDouble(key, value);
  } else if (key == "w_out") {
    weights.out_degree = ParseDouble(key, value);
  } else if (key == "w_pos") {
    weights.position = ParseDouble(key, value);
  } else if (key == "w_len") {
    weights.length = ParseDouble(key, value);
  } else if (key == "w_ne") {
    weights.named_entities = ParseDouble(key, value);
  } else if (key == "merge_overlaps") {
    merge_overlaps = ParseBool(key, value);
  } else if (key == "keep_modifiers") {
    keep_modifiers = ParseBool(key, value);
  } else {
    throw ConfigError("unknown config key '" + std::string(key) + "'");
  }
}

void PipelineConfig::Validate() const {
  if (expansion_depth < 1) {
    throw ConfigError("config key 'expansion_depth' must be >= 1, got " +
                      std::to_string(expansion_depth));
  }
  if (!(lexical_weight >= 0) || !std::isfinite(lexical_weight)) {
    throw ConfigError("config key 'lambda' must be >= 0, got " +
                      FormatNumber(lexical_weight));
  }
  RequireFraction("rho", top_fraction);
  RequireFraction("phi", centroid_fraction);
  const char *names[] = {"w_in", "w_out", "w_pos", "w_len", "w_ne"};
  const auto values = weights.AsArray();
  for (int k = 0; k < kNumFeatures; ++k) {
    if (!std::isfinite(values[k]) || values[k] < 0) {
      throw ConfigError(std::string("config key '") + names[k] +
                        "' must be finite and >= 0, got " +
                        FormatNumber(values[k]));
    }
  }
}

ordered_json PipelineConfig::ToJson() const {
  return {{"wordnet_dir", wordnet_dir},
          {"expansion_depth", expansion_depth},
          {"lambda", lexical_weight},
          {"rho", top_fraction},
          {"phi", centroid_fraction},
          {"w_in", weights.in_degree},
          {"w_out", weights.out_degree},
          {"w_pos", weights.position},
          {"w_len", weights.length},
          {"w_ne", weights.named_entities},
          {"merge_overlaps", merge_overlaps},
          {"keep_modifiers", keep_modifiers}};
}

void ApplyConfigFile(const std::filesystem::path &path,
                     PipelineConfig *config) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string_view text(line);
    if (auto hash = text.find('#'); hash != std::string_view::npos) {
      text = text.substr(0, hash);
    }
    text = Trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(path.filename().string() + ":" +
                        std::to_string(line_number) + ": expected key = value");
    }
    try {
      config->Set(Trim(text.substr(0, eq)), Trim(text.substr(eq + 1)));
    } catch (const ConfigError &e) {
      throw ConfigError(path.filename().string() + ":" +
                        std::to_string(line_number) + ": " + e.what());
    }
  }
}

Lexicon LoadConfiguredLexicon(const PipelineConfig &config) {
  if (config.wordnet_dir.empty()) {
    throw ConfigError(
        "no WordNet directory: pass --wordnet or set FRAMESUM_WORDNET");
  }
  return LoadLexicon(std::filesystem::path(config.wordnet_dir));
}

InputFormat ParseInputFormat(std::string_view name) {
  if (name == "jsonl") return InputFormat::kJsonl;
  if (name == "conll") return InputFormat::kConll;
  throw ConfigError("unknown input format '" + std::string(name) +
                    "' (expected jsonl or conll)");
}

Document LoadDocument(const std::filesystem::path &path, InputFormat format) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return format == InputFormat::kJsonl ? ParseFramesJsonl(in)
                                         : ParseFramesConll(in);
  } catch (const ParseError &e) {
    throw ParseError(path.filename().string() + ": " + e.what());
  }
}

// Running.

namespace {

class StageRunner {
 public:
  explicit StageRunner(std::vector<StageTiming> *timing) : timing_(timing) {}

  template <typename Fn>
  auto operator()(const char *stage, Fn &&fn) {
    const auto start = std::chrono::steady_clock::now();
    auto record = [&] {
      const std::chrono::duration<double, std::milli> elapsed =
          std::chrono::steady_clock::now() - start;
      timing_->push_back({stage, elapsed.count()});
    };
    try {
      if constexpr (std::is_void_v<decltype(fn())>) {
        fn();
        record();
      } else {
        auto result = fn();
        record();
        return result;
      }
    } catch (const Error &e) {
      throw Error(e.kind(), std::string(stage) + ": " + e.what());
    } catch (const std::invalid_argument &e) {
      throw Error(ErrorKind::kUsage, std::string(stage) + ": " + e.what());
    }
  }

 private:
  std::vector<StageTiming> *timing_;
};

}  // namespace

RunCounts RunReport::counts() const {
  RunCounts c;
  c.sentences = document.sentences.size();
  c.frames = document.frames.size();
  c.edges = graph.edges().size();
  c.segments = segmentation.segments.size();
  c.centroids = selection.FrameIds().size();
  return c;
}

std::string RunReport::SummaryText() const {
  std::string text;
  for (const GeneratedSentence &sentence : summary) {
    text += sentence.text;
    text += '\n';
  }
  return text;
}

RunReport Summarize(const PipelineConfig &config, const Lexicon &lexicon,
                    Document document, const Document *reference) {
  config.Validate();
  RunReport report;
  StageRunner stage(&report.timing);
  report.document = std::move(document);
  const Document &doc = report.document;

  report.signatures = stage("signatures", [&] {
    return BuildAllSignatures(doc, lexicon, config.expansion_depth);
  });
  report.graph = stage("graph", [&] {
    return BuildGraph(report.signatures, config.top_fraction,
                      config.lexical_weight);
  });
  report.segmentation = stage("segmentation", [&] {
    return CreateSegments(doc, report.graph, config.merge_overlaps);
  });
  report.selection = stage("centroids", [&] {
    return SelectCentroids(doc, report.graph, report.segmentation,
                           config.weights, config.centroid_fraction);
  });
  report.summary = stage("generation", [&] {
    return AssembleSummary(report.selection, doc, config.keep_modifiers);
  });
  if (reference != nullptr) {
    report.evaluation = stage("evaluation", [&] {
      std::vector<FrameSignature> centroids;
      for (const GeneratedSentence &sentence : report.summary) {
        const int index = doc.IndexOf(sentence.frame_id);
        centroids.push_back(report.signatures[index]);
      }
      const auto references =
          BuildAllSignatures(*reference, lexicon, config.expansion_depth);
      return Evaluate(centroids, references, config.lexical_weight);
    });
  }
  return report;
}

RunReport RunSummarize(const PipelineConfig &config, const Lexicon &lexicon,
                       const std::filesystem::path &frames_path,
                       InputFormat format,
                       const std::optional<std::filesystem::path>
                           &reference_path) {
  config.Validate();
  std::vector<StageTiming> timing;
  StageRunner stage(&timing);
  Document doc =
      stage("ingest", [&] { return LoadDocument(frames_path, format); });
  std::optional<Document> reference;
  if (reference_path) {
    reference = stage("ingest-reference",
                      [&] { return LoadDocument(*reference_path, format); });
  }
  RunReport report = Summarize(config, lexicon, std::move(doc),
                               reference ? &*reference : nullptr);
  timing.insert(timing.end(), report.timing.begin(), report.timing.end());
  report.timing = std::move(timing);
  return report;
}

EvalReport RunEvaluate(const PipelineConfig &config, const Lexicon &lexicon,
                       const std::filesystem::path &system_path,
                       const std::filesystem::path &reference_path,
                       InputFormat format) {
  config.Validate();
  std::vector<StageTiming> timing;
  StageRunner stage(&timing);
  const Document system =
      stage("ingest", [&] { return LoadDocument(system_path, format); });
  const Document reference = stage(
      "ingest-reference", [&] { return LoadDocument(reference_path, format); });
  return stage("evaluation", [&] {
    const auto centroids =
        BuildAllSignatures(system, lexicon, config.expansion_depth);
    const auto references =
        BuildAllSignatures(reference, lexicon, config.expansion_depth);
    return Evaluate(centroids, references, config.lexical_weight);
  });
}

// Reporting.

namespace {

ordered_json FeaturesToJson(const FrameFeatures &f) {
  return {{"in_degree", f.in_degree},
          {"out_degree", f.out_degree},
          {"position", f.position},
          {"length", f.length},
          {"named_entities", f.named_entities}};
}

ordered_json SegmentsToJson(const Segmentation &segmentation,
                            const FrameGraph &graph) {
  const auto stats = ComputeSegmentStats(segmentation, graph);
  auto out = ordered_json::array();
  for (std::size_t k = 0; k < segmentation.segments.size(); ++k) {
    const Segment &segment = segmentation.segments[k];
    out.push_back({{"segment_id", segment.segment_id},
                   {"members", segment.members},
                   {"size", stats[k].size},
                   {"internal_edges", stats[k].internal_edges}});
  }
  return out;
}

ordered_json SignaturesToJson(std::span<const FrameSignature> signatures,
                              const Lexicon &lexicon) {
  auto out = ordered_json::array();
  for (const FrameSignature &s : signatures) {
    out.push_back(SignatureToJson(s, lexicon));
  }
  return out;
}

}  // namespace

ordered_json ReportToJson(const RunReport &report,
                          const PipelineConfig &config, const Lexicon &lexicon,
                          const ReportOptions &options) {
  const RunCounts counts = report.counts();
  ordered_json out;
  out["counts"] = {{"sentences", counts.sentences},
                   {"frames", counts.frames},
                   {"edges", counts.edges},
                   {"segments", counts.segments},
                   {"centroids", counts.centroids}};
  out["config"] = config.ToJson();
  out["segments"] = SegmentsToJson(report.segmentation, report.graph);

  auto centroids = ordered_json::array();
  for (const SegmentCentroids &segment : report.selection.segments) {
    for (const ScoredFrame &frame : segment.centroids) {
      centroids.push_back({{"segment_id", segment.segment_id},
                           {"frame_id", frame.frame_id},
                           {"score", frame.score},
                           {"features", FeaturesToJson(frame.features)}});
    }
  }
  out["centroids"] = std::move(centroids);

  auto summary = ordered_json::array();
  for (const GeneratedSentence &sentence : report.summary) {
    summary.push_back({{"frame_id", sentence.frame_id},
                       {"text", sentence.text},
                       {"complete", sentence.complete}});
  }
  out["summary"] = std::move(summary);

  if (options.include_signatures) {
    out["signatures"] = SignaturesToJson(report.signatures, lexicon);
  }
  if (report.evaluation) out["evaluation"] = report.evaluation->ToJson();
  if (options.include_timing) {
    ordered_json timing = ordered_json::object();
    for (const StageTiming &t : report.timing) timing[t.stage + "_ms"] = t.millis;
    out["timing"] = std::move(timing);
  }
  return out;
}

// Inspection.

InspectTarget ParseInspectTarget(std::string_view name) {
  if (name == "signatures") return InspectTarget::kSignatures;
  if (name == "graph") return InspectTarget::kGraph;
  if (name == "segments") return InspectTarget::kSegments;
  if (name == "features") return InspectTarget::kFeatures;
  throw ConfigError("unknown inspect target '" + std::string(name) +
                    "' (expected signatures, graph, segments or features)");
}

std::string Inspect(const PipelineConfig &config, const Lexicon &lexicon,
                    const Document &document, InspectTarget target) {
  config.Validate();
  const auto signatures =
      BuildAllSignatures(document, lexicon, config.expansion_depth);
  if (target == InspectTarget::kSignatures) {
    return SignaturesToJson(signatures, lexicon).dump(2) + "\n";
  }
  const FrameGraph graph = BuildGraph(signatures, config.top_fraction,
                                      config.lexical_weight);
  if (target == InspectTarget::kGraph) return GraphToDot(graph);
  if (target == InspectTarget::kSegments) {
    const Segmentation segmentation =
        CreateSegments(document, graph, config.merge_overlaps);
    return SegmentsToJson(segmentation, graph).dump(2) + "\n";
  }
  auto out = ordered_json::array();
  for (const Frame &frame : document.frames) {
    ordered_json entry = {{"frame_id", frame.frame_id}};
    entry["features"] =
        FeaturesToJson(ComputeFeatures(document, graph, frame.frame_id));
    out.push_back(std::move(entry));
  }
  return out.dump(2) + "\n";
}

std::string RunInspect(const PipelineConfig &config, const Lexicon &lexicon,
                       const std::filesystem::path &frames_path,
                       InputFormat format, InspectTarget target) {
  return Inspect(config, lexicon, LoadDocument(frames_path, format), target);
}

}  // namespace framesum
