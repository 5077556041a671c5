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

#include "chunklate/transfer_gen.hpp"

#include <stdexcept>

#include "chunklate/error.hpp"
#include "chunklate/text.hpp"

namespace chunklate {

std::optional<DummyPolicy> parse_dummy_policy(std::string_view name) {
  if (name == "copy") return DummyPolicy::copy;
  if (name == "suppress-copula") return DummyPolicy::suppress_copula;
  return std::nullopt;
}

const char* dummy_policy_name(DummyPolicy policy) {
  return policy == DummyPolicy::copy ? "copy" : "suppress-copula";
}

std::vector<TransferStep> transfer(const Lattice& lattice, const Path& path) {
  std::vector<TransferStep> steps;
  steps.reserve(path.edges.size());
  for (std::size_t e : path.edges) {
    const ChunkInstance& chunk = lattice.edge(e);
    if (chunk.is_dummy()) {
      steps.push_back({&chunk, nullptr});
      continue;
    }
    if (!chunk.pair) {
      throw std::invalid_argument("chunk " + chunk.label() +
                                  " has no template pair");
    }
    steps.push_back({&chunk, &chunk.pair->ar_template});
  }
  return steps;
}

namespace {

const TaggedWord* nth_of_category(std::span<const TaggedWord> words,
                                  Category category, unsigned ordinal) {
  unsigned seen = 0;
  for (const TaggedWord& w : words) {
    if (w.tag.category == category && ++seen == ordinal) return &w;
  }
  return nullptr;
}

}  // namespace

GeneratedChunk execute(const ArabicTemplate& tmpl,
                       std::span<const TaggedWord> english_chunk,
                       const Lexicon& lexicon, int template_id) {
  const Vocabulary& vocab = lexicon.vocabulary();
  GeneratedChunk out;
  out.source_kind = ChunkKind::normal;
  for (const auto& group : tmpl.groups) {
    Token token;
    const bool bare_ref =
        group.size() == 1 && std::holds_alternative<CategoryRef>(group.front());
    for (const GenCommand& cmd : group) {
      if (const auto* lit = std::get_if<Literal>(&cmd)) {
        token.text += lit->text;
        continue;
      }
      const auto& ref = std::get<CategoryRef>(cmd);
      const std::string ref_name =
          vocab.name(ref.category) + std::to_string(ref.ordinal);
      const TaggedWord* word =
          nth_of_category(english_chunk, ref.category, ref.ordinal);
      if (!word) {
        throw GenerationError(template_id,
                              ref_name + " has no matching word in the chunk");
      }
      const auto entries = lexicon.lookup(word->lemma, ref.category);
      if (entries.empty()) {
        throw GenerationError(template_id, "no lexicon entry for '" +
                                               word->lemma + "' (" + ref_name +
                                               ")");
      }
      const Realization r = realize(*entries.front(), ref.target_attrs);
      token.text += r.text;
      if (bare_ref) token.clitic = r.clitic;
    }
    out.tokens.push_back(std::move(token));
  }
  return out;
}

GeneratedChunk execute_dummy(std::span<const TaggedWord> words,
                             const Vocabulary& vocabulary, DummyPolicy policy) {
  GeneratedChunk out;
  out.source_kind = ChunkKind::dummy;
  const auto be = vocabulary.find_category("be");
  for (const TaggedWord& w : words) {
    if (policy == DummyPolicy::suppress_copula && be && w.tag.category == *be) {
      continue;
    }
    out.tokens.push_back({w.surface, false});
  }
  return out;
}

RenderResult render(std::span<const GeneratedChunk> chunks) {
  std::vector<const Token*> tokens;
  for (const GeneratedChunk& c : chunks) {
    for (const Token& t : c.tokens) tokens.push_back(&t);
  }
  RenderResult result;
  std::string joined;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    joined += tokens[i]->text;
    const bool last = i + 1 == tokens.size();
    if (tokens[i]->clitic) {
      if (last) {
        result.warnings.push_back("clitic '" + tokens[i]->text +
                                  "' has no following token");
      }
      continue;
    }
    if (!last) joined += ' ';
  }
  result.text = text::to_nfc(joined);
  return result;
}

Generation generate_path(const Lattice& lattice, const Path& path,
                         std::span<const TaggedWord> sentence,
                         const Lexicon& lexicon, DummyPolicy policy) {
  Generation g;
  g.steps = transfer(lattice, path);
  for (const TransferStep& step : g.steps) {
    const Span& span = step.chunk->span;
    if (span.end > sentence.size()) {
      throw std::invalid_argument("path extends past the tagged sentence");
    }
    const auto words = sentence.subspan(span.start, span.size());
    if (step.is_dummy()) {
      g.chunks.push_back(execute_dummy(words, lexicon.vocabulary(), policy));
    } else {
      g.chunks.push_back(
          execute(*step.tmpl, words, lexicon, step.chunk->pair->id));
    }
  }
  g.rendered = render(g.chunks);
  return g;
}

std::vector<std::string> generate(const Lattice& lattice,
                                  std::span<const Path> paths,
                                  std::span<const TaggedWord> sentence,
                                  const Lexicon& lexicon, DummyPolicy policy) {
  std::vector<std::string> out;
  out.reserve(paths.size());
  for (const Path& p : paths) {
    out.push_back(
        generate_path(lattice, p, sentence, lexicon, policy).rendered.text);
  }
  return out;
}

}  // namespace chunklate
