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

#include "chunklate/arabic_template.hpp"
#include "chunklate/error.hpp"
#include "doctest.h"

using namespace chunklate;

namespace {

const Vocabulary& vocab() {
  static const Vocabulary v = Vocabulary::standard();
  return v;
}

CategoryRef ref(const char* cat, unsigned ordinal, const char* key = "") {
  return {vocab().category(cat), ordinal, vocab().parse_key(key)};
}

std::size_t error_offset(const char* text) {
  try {
    parse_template(text, vocab());
  } catch (const TemplateSyntaxError& e) {
    return e.position();
  }
  FAIL("expected TemplateSyntaxError for " << text);
  return 0;
}

}  // namespace

TEST_CASE("parse_template: literal prefix and category reference") {
  const ArabicTemplate t = parse_template("(add [ال] n1 [pmean])", vocab());
  REQUIRE(t.groups.size() == 1);
  REQUIRE(t.groups[0].size() == 2);
  CHECK(std::get<Literal>(t.groups[0][0]) == Literal{"ال"});
  CHECK(std::get<CategoryRef>(t.groups[0][1]) == ref("n", 1, "pmean"));
}

TEST_CASE("parse_template: two groups, bare reference") {
  const ArabicTemplate t = parse_template("(prep1) (v1 [source])", vocab());
  REQUIRE(t.groups.size() == 2);
  CHECK(t.groups[0] == std::vector<GenCommand>{ref("prep", 1)});
  CHECK(t.groups[1] == std::vector<GenCommand>{ref("v", 1, "source")});
}

TEST_CASE("parse_template: literal suffix") {
  const ArabicTemplate t = parse_template("(n1 [pmean] add [نا])", vocab());
  REQUIRE(t.groups.size() == 1);
  CHECK(t.groups[0] ==
        std::vector<GenCommand>{ref("n", 1, "pmean"), Literal{"نا"}});
}

TEST_CASE("parse_template: attribute whitespace is trimmed") {
  CHECK(parse_template("(adj1 [s ,f])", vocab()) ==
        parse_template("(adj1[s,f])", vocab()));
  CHECK(parse_template("( n12 )", vocab()).groups[0] ==
        std::vector<GenCommand>{ref("n", 12)});
}

TEST_CASE("parse_template: errors") {
  CHECK_THROWS_AS(parse_template("add [", vocab()), TemplateSyntaxError);
  CHECK_THROWS_AS(parse_template("(add [", vocab()), TemplateSyntaxError);
  CHECK_THROWS_AS(parse_template("(n0)", vocab()), TemplateSyntaxError);
  CHECK_THROWS_AS(parse_template("(noun1)", vocab()), TemplateSyntaxError);
  CHECK_THROWS_AS(parse_template("(n1 [plural])", vocab()), TemplateSyntaxError);
  CHECK_THROWS_AS(parse_template("", vocab()), TemplateSyntaxError);
  CHECK_THROWS_AS(parse_template("()", vocab()), TemplateSyntaxError);
  CHECK_THROWS_AS(parse_template("(n)", vocab()), TemplateSyntaxError);
  CHECK_THROWS_AS(parse_template("(n1 adj1)", vocab()), TemplateSyntaxError);
  CHECK_THROWS_AS(parse_template("(add [])", vocab()), TemplateSyntaxError);
  CHECK_THROWS_AS(parse_template("(n1", vocab()), TemplateSyntaxError);
  CHECK(error_offset("(n1) (n0)") == 7);
}

TEST_CASE("property: format_template round-trips") {
  std::mt19937 rng(3);
  const std::vector<std::string> cats{"n", "v", "adj", "prep", "poss"};
  const std::vector<std::string> attrs{"pl", "f", "pmean", "source", "s"};
  const std::vector<std::string> lits{"ال", "نا", "ل", "و"};
  for (int trial = 0; trial < 300; ++trial) {
    ArabicTemplate t;
    const std::size_t groups = 1 + rng() % 4;
    for (std::size_t g = 0; g < groups; ++g) {
      std::vector<GenCommand> group;
      if (rng() % 2) group.push_back(Literal{lits[rng() % lits.size()]});
      if (group.empty() || rng() % 3) {
        CategoryRef r{vocab().category(cats[rng() % cats.size()]),
                      1 + static_cast<unsigned>(rng() % 3), {}};
        for (const auto& a : attrs) {
          if (rng() % 4 == 0) r.target_attrs.insert(*vocab().find_attribute(a));
        }
        group.push_back(r);
      }
      if (rng() % 2) group.push_back(Literal{lits[rng() % lits.size()]});
      t.groups.push_back(std::move(group));
    }
    const std::string text = format_template(t, vocab());
    CHECK_MESSAGE(parse_template(text, vocab()) == t, text);
  }
}
