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

// Shared fixtures, generators and brute-force oracles for the test suites.
// Oracles here deliberately avoid the library's traversal code.

#ifndef CHUNKLATE_TESTS_SUPPORT_HPP
#define CHUNKLATE_TESTS_SUPPORT_HPP

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chunklate/engine.hpp"
#include "chunklate/lattice.hpp"
#include "chunklate/matcher.hpp"
#include "json.hpp"

namespace chunklate::testing {

inline std::string fixture(const std::string& relative) {
  return std::string(CHUNKLATE_FIXTURE_DIR) + "/" + relative;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline const char* kExample1Sentence =
    "the Proteins are necessary for building our bodies";
inline const char* kExample1Arabic = "البروتينيات ضرورية لبناء أجسامنا";
inline const char* kExample1ArabicCopy =
    "البروتينيات are ضرورية لبناء أجسامنا";

inline Translator example1_translator() {
  return Translator::load(fixture("example1/lexicon.jsonl"),
                          fixture("example1/affixes.jsonl"),
                          fixture("example1/corpus.jsonl"));
}

inline Tag tag(const Vocabulary& v, const std::string& cat,
               std::vector<std::string> attrs = {}) {
  return Tag{v.category(cat), v.attrs(attrs)};
}

inline Corpus corpus_from_text(const std::string& jsonl,
                               const Vocabulary& v = Vocabulary::standard()) {
  std::istringstream in(jsonl);
  return Corpus::load(in, v);
}

// Pairs whose English template is `length` nouns. For every length there
// are three pairs: a base, an exact duplicate of it, and one with a
// different Arabic template.
inline Corpus synthetic_corpus(std::size_t max_length) {
  std::string jsonl;
  int id = 1;
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::string tmpl = "[";
    for (std::size_t k = 0; k < len; ++k) {
      tmpl += std::string(k ? "," : "") + "{\"cat\":\"n\"}";
    }
    tmpl += "]";
    for (const char* ar : {"(n1)", "(n1)", "(n1 [pmean])"}) {
      jsonl += "{\"id\":" + std::to_string(id++) + ",\"en_template\":" + tmpl +
               ",\"ar_template\":\"" + ar + "\"}\n";
    }
  }
  return corpus_from_text(jsonl);
}

inline const TemplatePair* synthetic_pair(const Corpus& c, std::size_t length,
                                          int variant) {
  return c.find(static_cast<int>((length - 1) * 3) + 1 + variant);
}

// Random raw matrix: n in [1, max_n], up to `max_rows` spans.
inline CorrespondenceMatrix random_matrix(std::mt19937& rng, const Corpus& c,
                                          std::size_t max_n,
                                          std::size_t max_rows) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
  const std::size_t rows =
      std::uniform_int_distribution<std::size_t>(0, max_rows)(rng);
  std::vector<ChunkInstance> chunks;
  for (std::size_t r = 0; r < rows; ++r) {
    // Bias towards short spans so random lattices are not trivially one edge.
    std::size_t start = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    const std::size_t room = n - start;
    const std::size_t cap = std::min<std::size_t>(room, 4);
    const std::size_t len = std::uniform_int_distribution<std::size_t>(1, cap)(rng);
    const int variant = std::uniform_int_distribution<int>(0, 2)(rng);
    chunks.push_back({static_cast<int>(r + 1), {start, start + len},
                      ChunkKind::normal, synthetic_pair(c, len, variant), ""});
  }
  return build_matrix(std::move(chunks), n);
}

using CanonicalRow = std::tuple<std::size_t, std::size_t, bool, std::string,
                                std::string>;
using CanonicalPath = std::vector<CanonicalRow>;

inline CanonicalRow canonical(const ChunkInstance& c) {
  if (c.is_dummy()) return {c.span.start, c.span.end, true, "", ""};
  std::string en;
  for (const Tag& t : c.pair->en_template) {
    en += std::to_string(t.category.id) + ":" + std::to_string(t.attrs.bits()) +
          " ";
  }
  return {c.span.start, c.span.end, false, en, c.pair->ar_template_text};
}

// Independent brute force: every complete node-0 to node-n row sequence,
// canonicalized. Rows are scanned in full at every node.
inline std::set<CanonicalPath> brute_force_paths(const CorrespondenceMatrix& m) {
  std::set<CanonicalPath> out;
  CanonicalPath current;
  auto walk = [&](auto&& self, std::size_t node) -> void {
    if (node == m.n) {
      out.insert(current);
      return;
    }
    for (const ChunkInstance& r : m.rows) {
      if (r.span.start != node) continue;
      current.push_back(canonical(r));
      self(self, r.span.end);
      current.pop_back();
    }
  };
  walk(walk, 0);
  return out;
}

// Independent brute force over edge indices, in out-edge order.
inline std::vector<std::vector<std::size_t>> brute_force_edge_paths(
    std::size_t n, const std::vector<ChunkInstance>& edges) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  auto walk = [&](auto&& self, std::size_t node) -> void {
    if (node == n) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i].span.start != node) continue;
      current.push_back(i);
      self(self, edges[i].span.end);
      current.pop_back();
    }
  };
  walk(walk, 0);
  return out;
}

// Branching lattice fixture with synthetic pairs matching each span length.
struct Branching {
  Corpus corpus;
  Lattice lattice;
  std::vector<std::string> names;  // per edge
  nlohmann::json data;

  // Maps a path to the lattice's edge-name sequence.
  std::vector<std::string> name_path(const Path& p) const {
    std::vector<std::string> out;
    for (std::size_t e : p.edges) out.push_back(names[e]);
    return out;
  }
};

inline Branching load_branching() {
  Branching f;
  f.data = nlohmann::json::parse(read_file(fixture("branching/lattice.json")));
  std::map<int, std::size_t> lengths;
  for (const auto& e : f.data["edges"]) {
    if (e["kind"] == "normal") {
      lengths[e["pair_id"].get<int>()] =
          e["span"][1].get<std::size_t>() - e["span"][0].get<std::size_t>();
    }
  }
  std::string jsonl;
  for (const auto& [id, len] : lengths) {
    std::string tmpl = "[";
    for (std::size_t k = 0; k < len; ++k) {
      tmpl += std::string(k ? "," : "") + "{\"cat\":\"n\"}";
    }
    tmpl += "]";
    jsonl += "{\"id\":" + std::to_string(id) + ",\"en_template\":" + tmpl +
             ",\"ar_template\":\"(n1)\"}\n";
  }
  f.corpus = corpus_from_text(jsonl);

  std::vector<ChunkInstance> edges;
  int next_normal = 1;
  for (const auto& e : f.data["edges"]) {
    const Span span{e["span"][0].get<std::size_t>(),
                    e["span"][1].get<std::size_t>()};
    const std::string name = e["name"];
    if (e["kind"] == "dummy") {
      edges.push_back({std::stoi(name.substr(1)), span, ChunkKind::dummy,
                       nullptr, ""});
    } else {
      edges.push_back({next_normal++, span, ChunkKind::normal,
                       f.corpus.find(e["pair_id"].get<int>()), ""});
    }
    f.names.push_back(name);
  }
  f.lattice = Lattice(f.data["n"].get<std::size_t>(), std::move(edges));
  return f;
}

// Example-2 raw matrix: row ids are the fixture row numbers.
struct Example2 {
  Corpus corpus;
  CorrespondenceMatrix raw;
  nlohmann::json data;
};

inline Example2 load_example2() {
  Example2 x;
  const Vocabulary vocab = Vocabulary::standard();
  x.corpus = Corpus::load_file(fixture("example2/corpus.jsonl"), vocab);
  x.data = nlohmann::json::parse(read_file(fixture("example2/matrix.json")));
  std::vector<ChunkInstance> rows;
  for (const auto& r : x.data["rows"]) {
    rows.push_back({r["id"].get<int>(),
                    {r["span"][0].get<std::size_t>(),
                     r["span"][1].get<std::size_t>()},
                    ChunkKind::normal,
                    x.corpus.find(r["pair_id"].get<int>()),
                    ""});
  }
  auto words = x.data["words"].get<std::vector<std::string>>();
  const std::size_t n = words.size();
  x.raw = build_matrix(std::move(rows), n, std::move(words));
  return x;
}

// Path file: one "chunkA + chunkB + ..." line per path.
inline std::vector<std::vector<int>> load_example2_paths() {
  std::vector<std::vector<int>> out;
  std::istringstream in(read_file(fixture("example2/paths.txt")));
  std::string line;
  while (std::getline(in, line)) {
    std::vector<int> ids;
    std::size_t pos = 0;
    while ((pos = line.find("chunk", pos)) != std::string::npos) {
      pos += 5;
      ids.push_back(std::stoi(line.substr(pos)));
    }
    if (!ids.empty()) out.push_back(std::move(ids));
  }
  return out;
}

inline std::vector<int> row_ids(const CorrespondenceMatrix& m) {
  std::vector<int> ids;
  for (const auto& r : m.rows) ids.push_back(r.id);
  return ids;
}

}  // namespace chunklate::testing

#endif  // CHUNKLATE_TESTS_SUPPORT_HPP
