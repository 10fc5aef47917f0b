# Copyright 2026 The Framesum Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Frame-based extractive summarization over a WordNet lexicon."""

from framesum._core import (
    ConfigError,
    Document,
    FramesumError,
    Lexicon,
    LexiconError,
    ParseError,
    assemble,
    build_graph,
    build_signatures,
    classify,
    create_segments,
    evaluate,
    expand,
    format_quality_table,
    fraction_count,
    load_lexicon,
    parse_frames_conll,
    parse_frames_jsonl,
    parse_quality_table,
    quality_stats,
    score_pair,
    select_centroids,
    summarize,
    synsets_of,
)

__all__ = [
    "ConfigError",
    "Document",
    "FramesumError",
    "Lexicon",
    "LexiconError",
    "ParseError",
    "assemble",
    "build_graph",
    "build_signatures",
    "classify",
    "create_segments",
    "evaluate",
    "expand",
    "format_quality_table",
    "fraction_count",
    "load_lexicon",
    "parse_frames_conll",
    "parse_frames_jsonl",
    "parse_quality_table",
    "quality_stats",
    "score_pair",
    "select_centroids",
    "summarize",
    "synsets_of",
]
