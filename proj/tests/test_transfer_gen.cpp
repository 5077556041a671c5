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

#include <random>

#include "chunklate/error.hpp"
#include "chunklate/transfer_gen.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace chunklate;
using namespace chunklate::testing;

namespace {

GeneratedChunk run(const Translator& t, int pair_id, const char* english) {
  const auto words = t.analyzer().analyze_sentence(english);
  return execute(t.corpus().find(pair_id)->ar_template, words, t.lexicon(),
                 pair_id);
}

GeneratedChunk chunk_of(std::vector<Token> tokens) {
  return {std::move(tokens), ChunkKind::normal};
}

}  // namespace

TEST_CASE("dummy policy names") {
  CHECK(parse_dummy_policy("copy") == DummyPolicy::copy);
  CHECK(parse_dummy_policy("suppress-copula") == DummyPolicy::suppress_copula);
  CHECK_FALSE(parse_dummy_policy("drop"));
  CHECK(std::string(dummy_policy_name(DummyPolicy::copy)) == "copy");
}

TEST_CASE("execute: the four example commands") {
  const Translator t = example1_translator();
  SUBCASE("definite plural noun") {
    const auto g = run(t, 5, "the proteins");
    CHECK(g.tokens == std::vector<Token>{{"البروتينيات", false}});
  }
  SUBCASE("preposition and verbal noun") {
    const auto g = run(t, 1, "for building");
    CHECK(g.tokens == std::vector<Token>{{"ل", true}, {"بناء", false}});
  }
  SUBCASE("noun with possessive suffix") {
    const auto g = run(t, 10, "our bodies");
    CHECK(g.tokens == std::vector<Token>{{"أجسامنا", false}});
  }
  SUBCASE("feminine adjective") {
    const auto g = run(t, 8, "necessary");
    CHECK(g.tokens == std::vector<Token>{{"ضرورية", false}});
  }
}

TEST_CASE("execute: ordinal counts within the chunk") {
  const Lexicon lex = Lexicon::load_file(fixture("example1/lexicon.jsonl"));
  const Vocabulary& v = lex.vocabulary();
  const std::vector<TaggedWord> words{{"protein", "protein", tag(v, "n", {"f"})},
                                      {"body", "body", tag(v, "n", {"f"})}};
  const auto second = execute(parse_template("(n2) (n1)", v), words, lex);
  CHECK(second.tokens == std::vector<Token>{{"جسم", false}, {"بروتين", false}});
  CHECK_THROWS_AS(execute(parse_template("(n3)", v), words, lex, 42),
                  GenerationError);
  const std::vector<TaggedWord> unknown{{"zork", "zork", tag(v, "n")}};
  try {
    execute(parse_template("(n1)", v), unknown, lex, 7);
    FAIL("expected GenerationError");
  } catch (const GenerationError& e) {
    CHECK(e.template_id() == 7);
  }
}

TEST_CASE("execute_dummy") {
  const Vocabulary v = Vocabulary::standard();
  const std::vector<TaggedWord> are{{"are", "are", tag(v, "be", {"p", "pl"})}};
  CHECK(execute_dummy(are, v, DummyPolicy::suppress_copula).tokens.empty());
  CHECK(execute_dummy(are, v, DummyPolicy::copy).tokens ==
        std::vector<Token>{{"are", false}});
  const std::vector<TaggedWord> unk{{"Zork", "Zork", Tag{v.unk(), {}}}};
  CHECK(execute_dummy(unk, v, DummyPolicy::suppress_copula).tokens ==
        std::vector<Token>{{"Zork", false}});
}

TEST_CASE("render") {
  CHECK(render({}).text.empty());
  const std::vector<GeneratedChunk> fused{chunk_of({{"ل", true}, {"بناء", false}})};
  CHECK(render(fused).text == "لبناء");
  const std::vector<GeneratedChunk> spaced{chunk_of({{"البروتينيات", false}}),
                                           chunk_of({}),
                                           chunk_of({{"ضرورية", false}})};
  CHECK(render(spaced).text == "البروتينيات ضرورية");
  const std::vector<GeneratedChunk> dangling{chunk_of({{"ل", true}})};
  const RenderResult r = render(dangling);
  CHECK(r.text == "ل");
  CHECK(r.warnings.size() == 1);
  // Alef followed by combining hamza composes to U+0623.
  const std::vector<GeneratedChunk> decomposed{chunk_of({{"\xD8\xA7\xD9\x94", false}})};
  CHECK(render(decomposed).text == "\xD8\xA3");
}

TEST_CASE("transfer") {
  SUBCASE("branching lattice path b") {
    const Branching f = load_branching();
    const Path b = enumerate_paths(f.lattice).paths[1];
    const auto steps = transfer(f.lattice, b);
    REQUIRE(steps.size() == 4);
    CHECK(steps[0].chunk->pair->id == 1);
    CHECK(steps[1].is_dummy());
    CHECK(steps[2].chunk->pair->id == 3);
    CHECK(steps[3].chunk->pair->id == 11);
    CHECK(steps[3].tmpl == &f.corpus.find(11)->ar_template);
  }
  SUBCASE("example 1 path") {
    const Translator t = example1_translator();
    const auto r = t.translate(kExample1Sentence);
    const auto steps = transfer(r.lattice, r.optimal.at(0));
    std::vector<int> ids;
    for (const auto& s : steps) ids.push_back(s.is_dummy() ? 0 : s.chunk->pair->id);
    CHECK(ids == std::vector<int>{5, 0, 8, 1, 10});
  }
  SUBCASE("single dummy") {
    const Lattice l(1, {{1, {0, 1}, ChunkKind::dummy, nullptr, "x"}});
    const auto steps = transfer(l, Path{{0}});
    REQUIRE(steps.size() == 1);
    CHECK(steps[0].is_dummy());
  }
}

TEST_CASE("generate") {
  const Translator t = example1_translator();
  const auto r = t.translate(kExample1Sentence);
  CHECK(generate(r.lattice, r.optimal, r.tagged, t.lexicon()) ==
        std::vector<std::string>{kExample1Arabic});
  CHECK(generate(r.lattice, r.optimal, r.tagged, t.lexicon(), DummyPolicy::copy) ==
        std::vector<std::string>{kExample1ArabicCopy});
  CHECK(generate(r.lattice, {}, r.tagged, t.lexicon()).empty());
}

TEST_CASE("property: generation preserves chunk and group counts; copy passes dummies") {
  const Translator t = example1_translator();
  std::mt19937 rng(13);
  const std::vector<std::string> pool{"the",  "proteins", "are",  "necessary",
                                      "for",  "building", "our",  "bodies",
                                      "zork", "Body",     "protein"};
  for (int trial = 0; trial < 200; ++trial) {
    std::string sentence;
    const std::size_t len = 1 + rng() % 9;
    for (std::size_t i = 0; i < len; ++i) {
      sentence += (i ? " " : "") + pool[rng() % pool.size()];
    }
    TranslateOptions copy;
    copy.dummy_policy = DummyPolicy::copy;
    const auto r = t.translate(sentence, copy);
    REQUIRE_FALSE(r.generations.empty());
    for (std::size_t k = 0; k < r.generations.size(); ++k) {
      const Generation& g = r.generations[k];
      const Path& p = r.optimal[k];
      REQUIRE(g.chunks.size() == p.edges.size());
      std::size_t cursor = 0;
      for (std::size_t i = 0; i < g.chunks.size(); ++i) {
        const ChunkInstance& c = r.lattice.edge(p.edges[i]);
        if (c.is_dummy()) {
          // The copied surface shows up in order.
          const auto at = g.rendered.text.find(c.surface, cursor);
          CHECK_MESSAGE(at != std::string::npos, sentence);
          if (at != std::string::npos) cursor = at + c.surface.size();
        } else {
          CHECK(g.chunks[i].tokens.size() == c.pair->ar_template.groups.size());
        }
      }
    }
    // Determinism.
    CHECK(t.translate(sentence, copy).outputs() == r.outputs());
  }
}
