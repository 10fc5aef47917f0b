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

// Command line front end.
//
// Sample usage:
//   framesum --wordnet /usr/share/wordnet summarize doc.jsonl
//       --report report.json --dump-graph graph.dot
//   framesum --wordnet dict evaluate system.jsonl reference.jsonl
//   framesum quality-stats ratings.json
//   framesum --wordnet dict wordnet lookup dog noun
//
// Exit codes: 0 success, 1 usage or configuration error, 2 input parse
// error, 3 lexicon error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "framesum/dot_writer.h"
#include "framesum/errors.h"
#include "framesum/evaluator.h"
#include "framesum/pipeline.h"
#include "framesum/wordnet.h"
#include "json.hpp"

namespace {

using framesum::ConfigError;
using framesum::PipelineConfig;

constexpr const char *kDescription =
    "Semantic frame summarizer.\n\n"
    "Input documents are SRL-annotated frames (JSON lines or CoNLL-2005 "
    "props\ncolumns). Pronouns must already be resolved to their "
    "antecedents and\nPOS hints, if any, supplied in the input; no tagger, "
    "coreference\nresolver or SRL model is run here.";

struct GlobalOptions {
  std::string wordnet;
  std::string config_path;
  std::vector<std::string> overrides;
  std::string format = "jsonl";
  std::string out;
};

// CLI > config file > defaults; FRAMESUM_WORDNET fills in a missing
// WordNet directory.
PipelineConfig ResolveConfig(const GlobalOptions &options,
                             bool merge_overlaps, bool keep_modifiers) {
  PipelineConfig config;
  if (!options.config_path.empty()) {
    framesum::ApplyConfigFile(options.config_path, &config);
  }
  for (const std::string &item : options.overrides) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("--set expects key=value, got '" + item + "'");
    }
    config.Set(item.substr(0, eq), item.substr(eq + 1));
  }
  if (!options.wordnet.empty()) config.wordnet_dir = options.wordnet;
  if (config.wordnet_dir.empty()) {
    if (const char *env = std::getenv("FRAMESUM_WORDNET")) {
      config.wordnet_dir = env;
    }
  }
  if (merge_overlaps) config.merge_overlaps = true;
  if (keep_modifiers) config.keep_modifiers = true;
  config.Validate();
  if (config.weights.AllZero()) {
    std::cerr << "warning: all feature weights are zero; centroids will be "
                 "chosen by frame id only\n";
  }
  return config;
}

void WriteOutput(const std::string &path, const std::string &text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  out << text;
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw framesum::ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string DescribeLookup(const framesum::Lexicon &lexicon,
                           const std::string &lemma, framesum::Pos pos,
                           int depth) {
  using framesum::ToString;
  std::ostringstream out;
  const framesum::SynsetIdSet senses = framesum::SynsetsOf(lexicon, lemma, pos);
  if (senses.empty()) {
    out << "no " << framesum::PosName(pos) << " senses for '" << lemma
        << "'\n";
    return out.str();
  }
  auto lemmas_of = [&](framesum::SynsetId id) {
    std::string text;
    for (const std::string &l : lexicon.Find(id)->lemmas) {
      if (!text.empty()) text += ", ";
      text += l;
    }
    return text;
  };
  for (framesum::SynsetId id : senses) {
    out << ToString(id) << " " << lemmas_of(id) << "\n";
    for (const framesum::Pointer &ptr : lexicon.Find(id)->pointers) {
      out << "  "
          << (ptr.relation == framesum::Relation::kHypernym ? "@" : "~")
          << " " << ToString(ptr.target) << " " << lemmas_of(ptr.target)
          << "\n";
    }
  }
  out << "expanded:";
  for (framesum::SynsetId id : framesum::Expand(lexicon, senses, depth)) {
    out << " " << ToString(id);
  }
  out << "\n";
  return out.str();
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app(kDescription, "framesum");
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--wordnet", global.wordnet,
                 "WordNet dict directory (fallback: $FRAMESUM_WORDNET)");
  app.add_option("--config", global.config_path,
                 "key = value configuration file");
  app.add_option("--set", global.overrides,
                 "Override a config key, e.g. --set rho=0.3 (repeatable)");
  app.add_option("--format", global.format, "Frame file format")
      ->check(CLI::IsMember({"jsonl", "conll"}));
  app.add_option("--out", global.out, "Output path (default: stdout)");
  app.fallthrough();

  // summarize
  auto *summarize = app.add_subcommand("summarize", "Summarize a frame file");
  std::string frames_path;
  std::string reference_path;
  std::string report_path;
  std::string graph_path;
  bool dump_signatures = false;
  bool merge_overlaps = false;
  bool keep_modifiers = false;
  bool no_timing = false;
  summarize->add_option("frames", frames_path, "Frame file")->required();
  summarize->add_option("--reference", reference_path,
                        "Reference summary frames to evaluate against");
  summarize->add_option("--report", report_path, "Write the JSON run report");
  summarize->add_option("--dump-graph", graph_path,
                        "Write the frame graph as DOT");
  summarize->add_flag("--dump-signatures", dump_signatures,
                      "Include frame signatures in the report");
  summarize->add_flag("--merge-overlaps", merge_overlaps,
                      "Union overlapping segments");
  summarize->add_flag("--keep-modifiers", keep_modifiers,
                      "Append ARGM-* chunks to generated sentences");
  summarize->add_flag("--no-timing", no_timing,
                      "Leave stage timings out of the report");

  // evaluate
  auto *evaluate = app.add_subcommand(
      "evaluate", "Score system summary frames against reference frames");
  std::string system_path;
  std::string eval_reference_path;
  evaluate->add_option("system", system_path, "System summary frames")
      ->required();
  evaluate->add_option("reference", eval_reference_path,
                       "Reference summary frames")
      ->required();

  // inspect
  auto *inspect =
      app.add_subcommand("inspect", "Dump an intermediate representation");
  std::string inspect_path;
  std::string what;
  inspect->add_option("frames", inspect_path, "Frame file")->required();
  inspect->add_option("--what", what, "signatures, graph, segments, features")
      ->required();
  inspect->add_flag("--merge-overlaps", merge_overlaps,
                    "Union overlapping segments");

  // quality-stats
  auto *quality = app.add_subcommand(
      "quality-stats", "Mean and standard deviation of human ratings");
  std::string ratings_path;
  quality->add_option("ratings", ratings_path, "Ratings JSON file")->required();

  // wordnet lookup
  auto *wordnet = app.add_subcommand("wordnet", "WordNet utilities");
  wordnet->require_subcommand(1);
  auto *lookup = wordnet->add_subcommand("lookup", "Show senses of a lemma");
  std::string lemma;
  std::string pos_name;
  int depth = 1;
  lookup->add_option("lemma", lemma, "Lemma")->required();
  lookup->add_option("pos", pos_name, "noun or verb")->required();
  lookup->add_option("--depth", depth, "Expansion depth")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const framesum::InputFormat format =
        framesum::ParseInputFormat(global.format);
    if (*quality) {
      const auto ratings = framesum::QualityRatings::FromJson(
          nlohmann::json::parse(ReadFile(ratings_path)));
      const auto rows = framesum::QualityStats(ratings);
      WriteOutput(global.out, framesum::FormatQualityTable(rows));
      return 0;
    }

    const PipelineConfig config =
        ResolveConfig(global, merge_overlaps, keep_modifiers);
    const framesum::Lexicon lexicon = framesum::LoadConfiguredLexicon(config);

    if (*summarize) {
      std::optional<std::filesystem::path> reference;
      if (!reference_path.empty()) reference = reference_path;
      const framesum::RunReport report = framesum::RunSummarize(
          config, lexicon, frames_path, format, reference);
      WriteOutput(global.out, report.SummaryText());
      if (!report_path.empty()) {
        framesum::ReportOptions options;
        options.include_signatures = dump_signatures;
        options.include_timing = !no_timing;
        std::ofstream out(report_path);
        if (!out) throw ConfigError("cannot write " + report_path);
        out << framesum::ReportToJson(report, config, lexicon, options).dump(2)
            << "\n";
      }
      if (!graph_path.empty()) {
        std::ofstream out(graph_path);
        if (!out) throw ConfigError("cannot write " + graph_path);
        out << framesum::GraphToDot(report.graph, &report.segmentation);
      }
    } else if (*evaluate) {
      const framesum::EvalReport report = framesum::RunEvaluate(
          config, lexicon, system_path, eval_reference_path, format);
      WriteOutput(global.out, report.ToJson().dump(2) + "\n");
    } else if (*inspect) {
      WriteOutput(global.out,
                  framesum::RunInspect(config, lexicon, inspect_path, format,
                                       framesum::ParseInspectTarget(what)));
    } else if (*lookup) {
      WriteOutput(global.out,
                  DescribeLookup(lexicon, lemma, framesum::ParsePos(pos_name),
                                 depth));
    }
  } catch (const framesum::Error &e) {
    std::cerr << "framesum: " << e.what() << "\n";
    return e.exit_code();
  } catch (const nlohmann::json::exception &e) {
    std::cerr << "framesum: " << e.what() << "\n";
    return static_cast<int>(framesum::ErrorKind::kParse);
  } catch (const std::exception &e) {
    std::cerr << "framesum: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
