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

#include "chunklate/matcher.hpp"

#include <algorithm>
#include <stdexcept>

namespace chunklate {

std::string ChunkInstance::label() const {
  return (is_dummy() ? "d" : "") + std::to_string(id);
}

const char* rule_name(TuningAction::Rule rule) {
  switch (rule) {
    case TuningAction::Rule::repeated:
      return "repeated";
    case TuningAction::Rule::unreachable:
      return "unreachable";
    case TuningAction::Rule::dead_end:
      return "dead-end";
    case TuningAction::Rule::dummy:
      return "dummy";
  }
  return "?";
}

std::vector<Span> enumerate_spans(std::size_t n) {
  std::vector<Span> spans;
  spans.reserve(n * (n + 1) / 2);
  for (std::size_t start = 0; start < n; ++start) {
    for (std::size_t end = start + 1; end <= n; ++end) {
      spans.push_back({start, end});
    }
  }
  return spans;
}

std::vector<ChunkInstance> find_chunks(std::span<const TaggedWord> tagged,
                                       const Corpus& corpus) {
  std::vector<ChunkInstance> out;
  std::vector<Tag> query;
  int next_id = 1;
  for (const Span& span : enumerate_spans(tagged.size())) {
    query.clear();
    std::string surface;
    for (std::size_t i = span.start; i < span.end; ++i) {
      query.push_back(tagged[i].tag);
      if (!surface.empty()) surface += ' ';
      surface += tagged[i].surface;
    }
    for (const TemplatePair* pair : corpus.match_exact(query)) {
      out.push_back({next_id++, span, ChunkKind::normal, pair, surface});
    }
  }
  return out;
}

CorrespondenceMatrix build_matrix(std::vector<ChunkInstance> chunks,
                                  std::size_t n,
                                  std::vector<std::string> words) {
  for (const ChunkInstance& c : chunks) {
    if (c.span.start >= c.span.end || c.span.end > n) {
      throw std::invalid_argument(
          "row " + c.label() + " span [" + std::to_string(c.span.start) +
          ", " + std::to_string(c.span.end) + ") outside sentence of length " +
          std::to_string(n));
    }
    if (c.is_dummy()) {
      if (c.span.size() != 1 || c.pair) {
        throw std::invalid_argument("dummy row " + c.label() +
                                    " must cover one word and carry no pair");
      }
    } else if (!c.pair || c.pair->en_template.size() != c.span.size()) {
      throw std::invalid_argument("row " + c.label() +
                                  " template length differs from its span");
    }
  }
  if (!words.empty() && words.size() != n) {
    throw std::invalid_argument("word labels do not match sentence length");
  }
  return {n, std::move(chunks), std::move(words)};
}

namespace {

bool same_translation_unit(const ChunkInstance& a, const ChunkInstance& b) {
  if (a.span != b.span || a.kind != b.kind) return false;
  if (a.is_dummy()) return true;
  return a.pair == b.pair ||
         (a.pair->en_template == b.pair->en_template &&
          a.pair->ar_template == b.pair->ar_template);
}

}  // namespace

CorrespondenceMatrix dedupe_repeated(CorrespondenceMatrix matrix,
                                     TuningLog* log) {
  std::vector<ChunkInstance> kept;
  kept.reserve(matrix.rows.size());
  for (ChunkInstance& row : matrix.rows) {
    const auto dup = std::find_if(kept.begin(), kept.end(), [&](const auto& k) {
      return same_translation_unit(k, row);
    });
    if (dup == kept.end()) {
      kept.push_back(std::move(row));
    } else if (log) {
      log->push_back({TuningAction::Rule::repeated, row, dup->id});
    }
  }
  matrix.rows = std::move(kept);
  return matrix;
}

CorrespondenceMatrix insert_dummies(CorrespondenceMatrix matrix,
                                    TuningLog* log) {
  const std::size_t n = matrix.n;
  if (n == 0) return matrix;

  int next_dummy = 1;
  for (const ChunkInstance& r : matrix.rows) {
    if (r.is_dummy()) next_dummy = std::max(next_dummy, r.id + 1);
  }

  std::vector<bool> reachable(n + 1, false);
  reachable[0] = true;
  for (std::size_t node = 0; node < n; ++node) {
    if (!reachable[node]) continue;
    bool has_out = false;
    for (const ChunkInstance& r : matrix.rows) {
      if (r.span.start == node) {
        has_out = true;
        reachable[r.span.end] = true;
      }
    }
    if (has_out) continue;
    ChunkInstance dummy{next_dummy++, {node, node + 1}, ChunkKind::dummy,
                        nullptr,
                        matrix.words.empty() ? std::string{} : matrix.words[node]};
    reachable[node + 1] = true;
    if (log) log->push_back({TuningAction::Rule::dummy, dummy, std::nullopt});
    matrix.rows.push_back(std::move(dummy));
  }
  return matrix;
}

CorrespondenceMatrix prune_unreachable_deadend(CorrespondenceMatrix matrix,
                                               TuningLog* log) {
  const std::size_t n = matrix.n;
  while (true) {
    std::vector<std::size_t> ends_at(n + 1, 0);
    std::vector<std::size_t> starts_at(n + 1, 0);
    for (const ChunkInstance& r : matrix.rows) {
      ++starts_at[r.span.start];
      ++ends_at[r.span.end];
    }

    std::vector<ChunkInstance> kept;
    bool changed = false;
    for (ChunkInstance& r : matrix.rows) {
      std::optional<TuningAction::Rule> rule;
      if (r.span.start > 0 && ends_at[r.span.start] == 0) {
        rule = TuningAction::Rule::unreachable;
      } else if (r.span.end < n && starts_at[r.span.end] == 0) {
        rule = TuningAction::Rule::dead_end;
      }
      if (!rule) {
        kept.push_back(std::move(r));
        continue;
      }
      changed = true;
      if (log) log->push_back({*rule, r, std::nullopt});
    }
    matrix.rows = std::move(kept);
    if (!changed) return matrix;
  }
}

CorrespondenceMatrix tune(CorrespondenceMatrix matrix, TuningLog* log) {
  matrix = dedupe_repeated(std::move(matrix), log);
  matrix = insert_dummies(std::move(matrix), log);
  return prune_unreachable_deadend(std::move(matrix), log);
}

CorrespondenceMatrix replay(CorrespondenceMatrix matrix, const TuningLog& log) {
  for (const TuningAction& action : log) {
    if (action.rule == TuningAction::Rule::dummy) {
      matrix.rows.push_back(action.row);
      continue;
    }
    const auto it =
        std::find_if(matrix.rows.begin(), matrix.rows.end(), [&](const auto& r) {
          return r.kind == action.row.kind && r.id == action.row.id;
        });
    if (it == matrix.rows.end()) {
      throw std::invalid_argument("tuning log removes missing row " +
                                  action.row.label());
    }
    matrix.rows.erase(it);
  }
  return matrix;
}

}  // namespace chunklate
