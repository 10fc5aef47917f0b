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

// Python bindings. Heavy results (signatures, reports) cross the boundary as
// plain dicts built from the library's own JSON form.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <charconv>
#include <string>
#include <vector>

#include "framesum/assembler.h"
#include "framesum/centroid.h"
#include "framesum/errors.h"
#include "framesum/evaluator.h"
#include "framesum/frame.h"
#include "framesum/pipeline.h"
#include "framesum/segmentation.h"
#include "framesum/signature.h"
#include "framesum/similarity_graph.h"
#include "framesum/wordnet.h"

namespace py = pybind11;

namespace framesum {
namespace {

py::object ToPython(const nlohmann::ordered_json &j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

nlohmann::json FromPython(const py::object &obj) {
  return nlohmann::json::parse(
      py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

// "n:02084071" -> SynsetId.
SynsetId ParseId(const std::string &text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw ConfigError("bad synset id '" + text + "'");
  }
  SynsetId id;
  id.pos = ParsePos(text.substr(0, colon));
  const char *first = text.data() + colon + 1;
  const char *last = text.data() + text.size();
  auto [end, ec] = std::from_chars(first, last, id.offset);
  if (ec != std::errc() || end != last || first == last) {
    throw ConfigError("bad synset id '" + text + "'");
  }
  return id;
}

std::vector<std::string> IdStrings(const SynsetIdSet &set) {
  std::vector<std::string> out;
  for (SynsetId id : set) out.push_back(ToString(id));
  return out;
}

py::dict EdgeDict(const Edge &e) {
  py::dict d;
  d["source"] = e.source;
  d["target"] = e.target;
  d["weight"] = e.weight;
  d["a_score"] = e.a_score;
  d["v_score"] = e.v_score;
  d["priority"] = static_cast<int>(e.priority);
  return d;
}

FeatureWeights WeightsFrom(const py::dict &w) {
  FeatureWeights weights;
  for (auto [key, value] : w) {
    const auto name = key.cast<std::string>();
    const double v = value.cast<double>();
    if (name == "in_degree") {
      weights.in_degree = v;
    } else if (name == "out_degree") {
      weights.out_degree = v;
    } else if (name == "position") {
      weights.position = v;
    } else if (name == "length") {
      weights.length = v;
    } else if (name == "named_entities") {
      weights.named_entities = v;
    } else {
      throw ConfigError("unknown feature weight '" + name + "'");
    }
  }
  return weights;
}

PipelineConfig ConfigFrom(const py::dict &settings) {
  PipelineConfig config;
  for (auto [key, value] : settings) {
    std::string text;
    if (py::isinstance<py::bool_>(value)) {
      text = value.cast<bool>() ? "true" : "false";
    } else {
      text = py::str(value).cast<std::string>();
    }
    config.Set(key.cast<std::string>(), text);
  }
  config.Validate();
  return config;
}

}  // namespace
}  // namespace framesum

PYBIND11_MODULE(_core, m) {
  using namespace framesum;
  m.doc() = "Frame-based extractive summarization";

  static py::exception<Error> base(m, "FramesumError", PyExc_RuntimeError);
  static py::exception<ConfigError> config_error(m, "ConfigError",
                                                 base.ptr());
  static py::exception<ParseError> parse_error(m, "ParseError", base.ptr());
  static py::exception<LexiconError> lexicon_error(m, "LexiconError",
                                                   base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ConfigError &e) {
      py::set_error(config_error, e.what());
    } catch (const ParseError &e) {
      py::set_error(parse_error, e.what());
    } catch (const LexiconError &e) {
      py::set_error(lexicon_error, e.what());
    } catch (const Error &e) {
      py::set_error(base, e.what());
    }
  });

  py::class_<Lexicon>(m, "Lexicon")
      .def("synset_count",
           [](const Lexicon &lex, const std::string &pos) {
             return lex.synset_count(ParsePos(pos));
           })
      .def("index_size",
           [](const Lexicon &lex, const std::string &pos) {
             return lex.index_size(ParsePos(pos));
           })
      .def("lemmas", [](const Lexicon &lex, const std::string &id) {
        const Synset *s = lex.Find(ParseId(id));
        if (s == nullptr) throw LexiconError("unknown synset " + id);
        return s->lemmas;
      });

  m.def("load_lexicon",
        [](const std::filesystem::path &dir) { return LoadLexicon(dir); },
        py::arg("directory"));
  m.def(
      "synsets_of",
      [](const Lexicon &lex, const std::string &lemma, const std::string &pos) {
        return IdStrings(SynsetsOf(lex, lemma, ParsePos(pos)));
      },
      py::arg("lexicon"), py::arg("lemma"), py::arg("pos"));
  m.def(
      "expand",
      [](const Lexicon &lex, const std::vector<std::string> &seed, int depth) {
        SynsetIdSet ids;
        for (const std::string &s : seed) ids.Insert(ParseId(s));
        return IdStrings(Expand(lex, ids, depth));
      },
      py::arg("lexicon"), py::arg("seed"), py::arg("depth") = 1);

  py::class_<Document>(m, "Document")
      .def_readonly("sentences", &Document::sentences)
      .def_property_readonly("frame_ids",
                             [](const Document &d) {
                               std::vector<int> ids;
                               for (const Frame &f : d.frames) {
                                 ids.push_back(f.frame_id);
                               }
                               return ids;
                             })
      .def("__len__", [](const Document &d) { return d.frames.size(); })
      .def("to_jsonl",
           [](const Document &d) { return WriteFramesJsonl(d); });

  m.def("parse_frames_jsonl",
        [](const std::string &text) { return ParseFramesJsonl(text); },
        py::arg("text"));
  m.def("parse_frames_conll",
        [](const std::string &text) { return ParseFramesConll(text); },
        py::arg("text"));

  py::class_<FrameSignature>(m, "Signature")
      .def_readonly("frame_id", &FrameSignature::frame_id)
      .def_property_readonly(
          "noun_synsets",
          [](const FrameSignature &s) { return IdStrings(s.noun_synsets); })
      .def_property_readonly(
          "verb_synsets",
          [](const FrameSignature &s) { return IdStrings(s.verb_synsets); })
      .def_readonly("arg_lemmas", &FrameSignature::arg_lemmas)
      .def_readonly("verb_lemma", &FrameSignature::verb_lemma);

  m.def("build_signatures", &BuildAllSignatures, py::arg("document"),
        py::arg("lexicon"), py::arg("depth") = 1);
  m.def(
      "score_pair",
      [](const FrameSignature &a, const FrameSignature &b, double lambda) {
        const PairScore s = ScorePair(a, b, lambda);
        py::dict d;
        d["a_score"] = s.a_score;
        d["v_score"] = s.v_score;
        d["weight"] = s.weight();
        d["priority"] = static_cast<int>(s.priority);
        return d;
      },
      py::arg("a"), py::arg("b"), py::arg("lexical_weight") = 1.0);
  m.def(
      "classify",
      [](double a, double v) { return static_cast<int>(Classify(a, v)); },
      py::arg("a_score"), py::arg("v_score"));
  m.def("fraction_count", &FractionCount, py::arg("fraction"), py::arg("n"));

  py::class_<FrameGraph>(m, "FrameGraph")
      .def_property_readonly("nodes", &FrameGraph::nodes)
      .def_property_readonly("edges",
                             [](const FrameGraph &g) {
                               py::list edges;
                               for (const Edge &e : g.edges()) {
                                 edges.append(EdgeDict(e));
                               }
                               return edges;
                             })
      .def("in_degree", &FrameGraph::InDegree)
      .def("out_degree", &FrameGraph::OutDegree);

  m.def(
      "build_graph",
      [](const std::vector<FrameSignature> &sigs, double rho, double lambda) {
        return BuildGraph(sigs, rho, lambda);
      },
      py::arg("signatures"), py::arg("rho") = 0.15,
      py::arg("lexical_weight") = 1.0);
  m.def(
      "create_segments",
      [](const Document &doc, const FrameGraph &graph, bool merge) {
        std::vector<std::vector<int>> out;
        for (const Segment &s : CreateSegments(doc, graph, merge).segments) {
          out.push_back(s.members);
        }
        return out;
      },
      py::arg("document"), py::arg("graph"), py::arg("merge_overlaps") = false);
  m.def(
      "select_centroids",
      [](const Document &doc, const FrameGraph &graph,
         const std::vector<std::vector<int>> &segments, double phi,
         const py::dict &weights) {
        Segmentation seg;
        for (std::size_t k = 0; k < segments.size(); ++k) {
          seg.segments.push_back({static_cast<int>(k), segments[k]});
        }
        return SelectCentroids(doc, graph, seg, WeightsFrom(weights), phi)
            .FrameIds();
      },
      py::arg("document"), py::arg("graph"), py::arg("segments"),
      py::arg("phi") = 0.2, py::arg("weights") = py::dict());
  m.def(
      "assemble",
      [](const Document &doc, int frame_id, bool keep_modifiers) {
        const Frame *frame = doc.FindFrame(frame_id);
        if (frame == nullptr) {
          throw py::key_error("unknown frame " + std::to_string(frame_id));
        }
        const GeneratedSentence s = Assemble(*frame, keep_modifiers);
        return py::make_tuple(s.text, s.complete);
      },
      py::arg("document"), py::arg("frame_id"),
      py::arg("keep_modifiers") = false);

  m.def(
      "evaluate",
      [](const std::vector<FrameSignature> &centroids,
         const std::vector<FrameSignature> &references, double lambda) {
        return ToPython(Evaluate(centroids, references, lambda).ToJson());
      },
      py::arg("centroids"), py::arg("references"),
      py::arg("lexical_weight") = 1.0);
  m.def(
      "quality_stats",
      [](const py::dict &ratings) {
        py::list rows;
        for (const QualityRow &r :
             QualityStats(QualityRatings::FromJson(FromPython(ratings)))) {
          rows.append(py::make_tuple(r.label, r.mean, r.sd));
        }
        return rows;
      },
      py::arg("ratings"));
  m.def(
      "format_quality_table",
      [](const std::vector<std::tuple<std::string, double, double>> &rows) {
        std::vector<QualityRow> q;
        for (const auto &[label, mean, sd] : rows) q.push_back({label, mean, sd});
        return FormatQualityTable(q);
      },
      py::arg("rows"));
  m.def(
      "parse_quality_table",
      [](const std::string &text) {
        std::vector<std::tuple<std::string, double, double>> rows;
        for (const QualityRow &r : ParseQualityTable(text)) {
          rows.emplace_back(r.label, r.mean, r.sd);
        }
        return rows;
      },
      py::arg("text"));

  m.def(
      "summarize",
      [](const Document &doc, const Lexicon &lexicon, const py::dict &config,
         const Document *reference, bool include_timing) {
        const PipelineConfig c = ConfigFrom(config);
        const RunReport report = Summarize(c, lexicon, doc, reference);
        ReportOptions options;
        options.include_timing = include_timing;
        py::dict out = ToPython(ReportToJson(report, c, lexicon, options));
        out["text"] = report.SummaryText();
        return out;
      },
      py::arg("document"), py::arg("lexicon"), py::arg("config") = py::dict(),
      py::arg("reference") = nullptr, py::arg("include_timing") = false,
      "Runs the full pipeline and returns the JSON report as a dict, plus the "
      "summary under 'text'. `config` takes the same keys as the CLI --set.");
}
