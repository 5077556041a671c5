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

#ifndef CHUNKLATE_TRANSFER_GEN_HPP
#define CHUNKLATE_TRANSFER_GEN_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chunklate/arabic_template.hpp"
#include "chunklate/lattice.hpp"
#include "chunklate/lexicon.hpp"

namespace chunklate {

enum class DummyPolicy {
  copy,             // every dummy passes its English words through
  suppress_copula,  // dummies over "be" words emit nothing; others copy
};

// Accepts "copy" and "suppress-copula".
std::optional<DummyPolicy> parse_dummy_policy(std::string_view name);
const char* dummy_policy_name(DummyPolicy policy);

// A path edge paired with what generates it. `tmpl` is null for dummies.
struct TransferStep {
  const ChunkInstance* chunk = nullptr;
  const ArabicTemplate* tmpl = nullptr;

  bool is_dummy() const { return tmpl == nullptr; }
};

struct Token {
  std::string text;
  bool clitic = false;  // written fused with the following token

  friend bool operator==(const Token&, const Token&) = default;
};

struct GeneratedChunk {
  std::vector<Token> tokens;
  ChunkKind source_kind = ChunkKind::normal;
};

struct RenderResult {
  std::string text;
  std::vector<std::string> warnings;
};

std::vector<TransferStep> transfer(const Lattice& lattice, const Path& path);

// Runs each group of `tmpl` against the words of one English chunk.
// `template_id` only labels errors. Throws GenerationError when a category
// reference cannot be resolved.
GeneratedChunk execute(const ArabicTemplate& tmpl,
                       std::span<const TaggedWord> english_chunk,
                       const Lexicon& lexicon, int template_id = 0);

// Dummy output under `policy`. `words` are the tagged words the dummy covers.
GeneratedChunk execute_dummy(std::span<const TaggedWord> words,
                             const Vocabulary& vocabulary, DummyPolicy policy);

// Clitic tokens join the next token; others are separated by one space.
// Output is NFC.
RenderResult render(std::span<const GeneratedChunk> chunks);

struct Generation {
  std::vector<TransferStep> steps;
  std::vector<GeneratedChunk> chunks;
  RenderResult rendered;
};

// transfer, execute and render one path against the tagged sentence.
Generation generate_path(const Lattice& lattice, const Path& path,
                         std::span<const TaggedWord> sentence,
                         const Lexicon& lexicon, DummyPolicy policy);

// One sentence per path.
std::vector<std::string> generate(const Lattice& lattice,
                                  std::span<const Path> paths,
                                  std::span<const TaggedWord> sentence,
                                  const Lexicon& lexicon,
                                  DummyPolicy policy =
                                      DummyPolicy::suppress_copula);

}  // namespace chunklate

#endif  // CHUNKLATE_TRANSFER_GEN_HPP
