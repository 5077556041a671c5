// Copyright 2026 The Chunklate Authors
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

#include "chunklate/trace.hpp"

#include <algorithm>

namespace chunklate {

using nlohmann::json;

namespace {

json row_id(const ChunkInstance& row) {
  return row.is_dummy() ? json(row.label()) : json(row.id);
}

json tagged_to_json(const TaggedWord& w, const Vocabulary& vocab) {
  return {{"surface", w.surface},
          {"lemma", w.lemma},
          {"tag", vocab.format(w.tag)}};
}

}  // namespace

json row_to_json(const ChunkInstance& row) {
  json j = {{"id", row_id(row)},
            {"span", {row.span.start, row.span.end}},
            {"kind", row.is_dummy() ? "dummy" : "normal"}};
  if (row.pair) j["pair_id"] = row.pair->id;
  return j;
}

json matrix_to_json(const CorrespondenceMatrix& matrix) {
  json rows = json::array();
  for (const ChunkInstance& r : matrix.rows) rows.push_back(row_to_json(r));
  return {{"n", matrix.n}, {"rows", std::move(rows)}};
}

json lattice_to_json(const Lattice& lattice, const PathEnumeration& enumeration,
                     std::span<const Path> optimal) {
  json edges = json::array();
  for (const ChunkInstance& e : lattice.edges()) edges.push_back(row_to_json(e));

  json paths = json::array();
  for (const Path& p : enumeration.paths) {
    json ids = json::array();
    for (std::size_t e : p.edges) ids.push_back(row_id(lattice.edge(e)));
    const PathCost cost = path_cost(lattice, p);
    paths.push_back({{"edges", std::move(ids)},
                     {"cost", {cost.dummies, cost.chunks}}});
  }

  json best = json::array();
  for (const Path& p : optimal) {
    const auto it =
        std::find(enumeration.paths.begin(), enumeration.paths.end(), p);
    if (it != enumeration.paths.end()) {
      best.push_back(it - enumeration.paths.begin());
    }
  }
  return {{"nodes", lattice.node_count()},
          {"edges", std::move(edges)},
          {"paths", std::move(paths)},
          {"optimal", std::move(best)},
          {"truncated", enumeration.truncated}};
}

json tuning_to_json(const TuningLog& log) {
  json out = json::array();
  for (const TuningAction& a : log) {
    json j = {{"rule", rule_name(a.rule)}, {"row", row_to_json(a.row)}};
    if (a.kept) j["kept"] = *a.kept;
    out.push_back(std::move(j));
  }
  return out;
}

json trace_report(const TranslationResult& result, const Vocabulary& vocab) {
  json tagged = json::array();
  for (const TaggedWord& w : result.tagged) {
    tagged.push_back(tagged_to_json(w, vocab));
  }
  json chunks = json::array();
  for (const ChunkInstance& c : result.chunks) {
    json j = row_to_json(c);
    j["surface"] = c.surface;
    chunks.push_back(std::move(j));
  }

  json templates = json::array();
  json outputs = json::array();
  for (const Generation& g : result.generations) {
    json steps = json::array();
    for (const TransferStep& s : g.steps) {
      json j = {{"row", row_id(*s.chunk)}, {"english", s.chunk->surface}};
      j["template"] = s.is_dummy() ? json("dummy")
                                   : json(s.chunk->pair->ar_template_text);
      steps.push_back(std::move(j));
    }
    templates.push_back(std::move(steps));
    json o = {{"text", g.rendered.text}};
    if (!g.rendered.warnings.empty()) o["warnings"] = g.rendered.warnings;
    outputs.push_back(std::move(o));
  }

  return {
      {"sentence", result.sentence},
      {"tagged", std::move(tagged)},
      {"span_count", result.span_count},
      {"chunks", std::move(chunks)},
      {"raw_matrix", matrix_to_json(result.raw_matrix)},
      {"tuning", tuning_to_json(result.tuning)},
      {"tuned_matrix", matrix_to_json(result.tuned_matrix)},
      {"lattice", lattice_to_json(result.lattice, result.enumeration,
                                  result.optimal)},
      {"templates", std::move(templates)},
      {"outputs", std::move(outputs)},
  };
}

}  // namespace chunklate
