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

#ifndef CHUNKLATE_ARABIC_TEMPLATE_HPP
#define CHUNKLATE_ARABIC_TEMPLATE_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chunklate/vocabulary.hpp"

namespace chunklate {

// Literal affix or word inserted verbatim: `add [ال]`.
struct Literal {
  std::string text;

  friend bool operator==(const Literal&, const Literal&) = default;
};

// `n1 [pmean]`: the first noun of the English chunk, realized with the
// Arabic-side attributes {pmean}. Empty attributes select the default form.
struct CategoryRef {
  Category category;
  unsigned ordinal = 1;
  AttrSet target_attrs;

  friend bool operator==(const CategoryRef&, const CategoryRef&) = default;
};

using GenCommand = std::variant<Literal, CategoryRef>;

// One group per output token; commands in a group are concatenated.
struct ArabicTemplate {
  std::vector<std::vector<GenCommand>> groups;

  friend bool operator==(const ArabicTemplate&, const ArabicTemplate&) =
      default;
};

// Grammar:
//   template := group+
//   group    := '(' item+ ')'
//   item     := 'add' '[' literal ']' | catref ( '[' attr (',' attr)* ']' )?
//   catref   := category-name ordinal-digits
// At most one catref per group. Throws TemplateSyntaxError.
ArabicTemplate parse_template(std::string_view text,
                              const Vocabulary& vocabulary);

// Inverse of parse_template up to whitespace.
std::string format_template(const ArabicTemplate& tmpl,
                            const Vocabulary& vocabulary);

}  // namespace chunklate

#endif  // CHUNKLATE_ARABIC_TEMPLATE_HPP
