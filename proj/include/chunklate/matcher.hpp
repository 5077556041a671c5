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

#ifndef CHUNKLATE_MATCHER_HPP
#define CHUNKLATE_MATCHER_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chunklate/corpus.hpp"
#include "chunklate/lexicon.hpp"

namespace chunklate {

// Half-open word range [start, end). Also an edge between boundary nodes
// `start` and `end` of the lattice.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - start; }

  friend auto operator<=>(const Span&, const Span&) = default;
};

enum class ChunkKind { normal, dummy };

struct ChunkInstance {
  // Normal rows are numbered from 1 in discovery order; dummies have their
  // own sequence and print as "d<k>".
  int id = 0;
  Span span;
  ChunkKind kind = ChunkKind::normal;
  const TemplatePair* pair = nullptr;  // null for dummies
  std::string surface;

  bool is_dummy() const { return kind == ChunkKind::dummy; }
  std::string label() const;
};

// Rows are chunk instances; cell(r, j) is derived from the row span.
struct CorrespondenceMatrix {
  std::size_t n = 0;
  std::vector<ChunkInstance> rows;
  // Surface text per word, used to label inserted dummies. May be empty.
  std::vector<std::string> words;

  bool cell(std::size_t row, std::size_t word) const {
    const Span& s = rows.at(row).span;
    return s.start <= word && word < s.end;
  }
};

// One removal or insertion performed while tuning a matrix.
struct TuningAction {
  enum class Rule { repeated, unreachable, dead_end, dummy };

  Rule rule = Rule::repeated;
  ChunkInstance row;
  // For `repeated`, the id of the row that was kept.
  std::optional<int> kept;
};

const char* rule_name(TuningAction::Rule rule);

using TuningLog = std::vector<TuningAction>;

// All contiguous spans: (0,1),(0,2),...,(0,n),(1,2),...,(n-1,n).
std::vector<Span> enumerate_spans(std::size_t n);

// One instance per (span, matching pair), ordered by span then corpus order.
std::vector<ChunkInstance> find_chunks(std::span<const TaggedWord> tagged,
                                       const Corpus& corpus);

// Throws std::invalid_argument for a span outside [0, n] or a normal row
// whose template length differs from its span.
CorrespondenceMatrix build_matrix(std::vector<ChunkInstance> chunks,
                                  std::size_t n,
                                  std::vector<std::string> words = {});

// Rows with equal (span, English template, Arabic template) collapse to the
// first one.
CorrespondenceMatrix dedupe_repeated(CorrespondenceMatrix matrix,
                                     TuningLog* log = nullptr);

// Forward sweep over nodes 0..n-1: a node reachable from 0 that has no
// outgoing row receives a dummy covering the next word.
CorrespondenceMatrix insert_dummies(CorrespondenceMatrix matrix,
                                    TuningLog* log = nullptr);

// Removes unreachable and dead-end rows until nothing changes. Each pass
// classifies every row against the rows present at the start of the pass.
CorrespondenceMatrix prune_unreachable_deadend(CorrespondenceMatrix matrix,
                                               TuningLog* log = nullptr);

// dedupe_repeated, then insert_dummies, then prune_unreachable_deadend.
CorrespondenceMatrix tune(CorrespondenceMatrix matrix, TuningLog* log = nullptr);

// Applies a tuning log to a matrix: removals by row identity, dummy
// insertions appended.
CorrespondenceMatrix replay(CorrespondenceMatrix matrix, const TuningLog& log);

}  // namespace chunklate

#endif  // CHUNKLATE_MATCHER_HPP
