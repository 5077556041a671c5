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

#include "chunklate/arabic_template.hpp"

#include "chunklate/error.hpp"
#include "chunklate/text.hpp"

namespace chunklate {

namespace {

bool is_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

class Parser {
 public:
  Parser(std::string_view text, const Vocabulary& vocab)
      : text_(text), vocab_(vocab) {}

  ArabicTemplate parse() {
    ArabicTemplate out;
    skip_space();
    if (at_end()) fail("empty template");
    while (!at_end()) {
      out.groups.push_back(group());
      skip_space();
    }
    return out;
  }

 private:
  std::vector<GenCommand> group() {
    expect('(');
    std::vector<GenCommand> items;
    bool has_ref = false;
    while (true) {
      skip_space();
      if (at_end()) fail("unterminated group, expected ')'");
      if (peek() == ')') {
        if (items.empty()) fail("empty group");
        ++pos_;
        return items;
      }
      const std::size_t item_pos = pos_;
      GenCommand cmd = item();
      if (std::holds_alternative<CategoryRef>(cmd)) {
        if (has_ref) {
          pos_ = item_pos;
          fail("a group holds at most one category reference");
        }
        has_ref = true;
      }
      items.push_back(std::move(cmd));
    }
  }

  GenCommand item() {
    const std::size_t name_pos = pos_;
    std::string_view name = letters();
    if (name.empty()) fail("expected 'add' or a category reference");
    if (name == "add" && (at_end() || !is_digit(peek()))) {
      skip_space();
      const std::string_view body = bracketed();
      const std::string_view literal = text::trim(body);
      if (literal.empty()) fail("empty literal in add [...]");
      return Literal{std::string(literal)};
    }

    const auto category = vocab_.find_category(name);
    if (!category) {
      pos_ = name_pos;
      fail("unknown category '" + std::string(name) + "'");
    }
    const std::size_t ordinal_pos = pos_;
    unsigned ordinal = 0;
    while (!at_end() && is_digit(peek())) {
      ordinal = ordinal * 10 + static_cast<unsigned>(peek() - '0');
      if (ordinal > 1000) fail("ordinal too large");
      ++pos_;
    }
    if (pos_ == ordinal_pos) fail("missing ordinal after '" + std::string(name) + "'");
    if (ordinal == 0) {
      pos_ = ordinal_pos;
      fail("ordinal must be at least 1");
    }

    CategoryRef ref{*category, ordinal, AttrSet{}};
    skip_space();
    if (!at_end() && peek() == '[') {
      const std::size_t body_pos = pos_ + 1;
      const std::string_view body = bracketed();
      std::size_t offset = 0;
      while (true) {
        const std::size_t comma = body.find(',', offset);
        const std::string_view token =
            text::trim(body.substr(offset, comma == std::string_view::npos
                                               ? std::string_view::npos
                                               : comma - offset));
        const auto attr = vocab_.find_attribute(token);
        if (!attr) {
          pos_ = body_pos + offset;
          fail("unknown attribute '" + std::string(token) + "'");
        }
        ref.target_attrs.insert(*attr);
        if (comma == std::string_view::npos) break;
        offset = comma + 1;
      }
    }
    return ref;
  }

  // Consumes "[ ... ]" and returns the text between the brackets.
  std::string_view bracketed() {
    expect('[');
    const std::size_t start = pos_;
    const std::size_t close = text_.find(']', pos_);
    if (close == std::string_view::npos) fail("unterminated '['");
    pos_ = close + 1;
    return text_.substr(start, close - start);
  }

  std::string_view letters() {
    const std::size_t start = pos_;
    while (!at_end() && is_alpha(peek())) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  void expect(char c) {
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (!at_end() && is_space(peek())) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& message) const {
    throw TemplateSyntaxError(pos_, message);
  }

  std::string_view text_;
  const Vocabulary& vocab_;
  std::size_t pos_ = 0;
};

}  // namespace

ArabicTemplate parse_template(std::string_view text,
                              const Vocabulary& vocabulary) {
  return Parser(text, vocabulary).parse();
}

std::string format_template(const ArabicTemplate& tmpl,
                            const Vocabulary& vocabulary) {
  std::string out;
  for (const auto& group : tmpl.groups) {
    if (!out.empty()) out += ' ';
    out += '(';
    bool first = true;
    for (const GenCommand& cmd : group) {
      if (!first) out += ' ';
      first = false;
      if (const auto* lit = std::get_if<Literal>(&cmd)) {
        out += "add [" + lit->text + "]";
      } else {
        const auto& ref = std::get<CategoryRef>(cmd);
        out += vocabulary.name(ref.category) + std::to_string(ref.ordinal);
        if (!ref.target_attrs.empty()) {
          out += " [" + vocabulary.key(ref.target_attrs) + "]";
        }
      }
    }
    out += ')';
  }
  return out;
}

}  // namespace chunklate
