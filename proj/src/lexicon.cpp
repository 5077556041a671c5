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

#include "chunklate/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <stdexcept>

#include "chunklate/error.hpp"
#include "chunklate/text.hpp"
#include "json_lines.hpp"

namespace chunklate {

using nlohmann::json;

Lexicon::Lexicon(Vocabulary vocabulary) : vocabulary_(std::move(vocabulary)) {}

void Lexicon::add(LexEntry entry) {
  entry.lemma = text::to_lower(entry.lemma);
  if (entry.lemma.empty()) throw std::invalid_argument("empty lemma");
  for (const LexEntry* existing : lookup(entry.lemma, entry.category)) {
    throw std::invalid_argument("duplicate entry '" + existing->lemma + "' (" +
                                vocabulary_.name(existing->category) + ")");
  }
  if (!entry.realizations.contains(AttrSet{})) {
    throw std::invalid_argument("entry '" + entry.lemma +
                                "' has no default realization");
  }
  for (const auto& [key, value] : entry.realizations) {
    if (!text::is_arabic_text(value)) {
      throw std::invalid_argument("entry '" + entry.lemma +
                                  "': realization '" + vocabulary_.key(key) +
                                  "' is not Arabic text");
    }
  }
  by_lemma_.emplace(entry.lemma, entries_.size());
  entries_.push_back(std::move(entry));
}

std::vector<const LexEntry*> Lexicon::lookup(
    std::string_view lemma, std::optional<Category> category) const {
  std::vector<const LexEntry*> out;
  const std::string key = text::to_lower(lemma);
  const auto [first, last] = by_lemma_.equal_range(key);
  for (auto it = first; it != last; ++it) {
    const LexEntry& e = entries_[it->second];
    if (!category || e.category == *category) out.push_back(&e);
  }
  return out;
}

namespace {

LexEntry parse_entry(const json& record, const Vocabulary& vocab) {
  LexEntry entry;
  entry.lemma = record.at("lemma").get<std::string>();
  entry.category = vocab.category(record.at("category").get<std::string>());
  if (record.contains("attrs")) {
    entry.base_attrs =
        vocab.attrs(record.at("attrs").get<std::vector<std::string>>());
  }
  const json& arabic = record.at("arabic");
  if (!arabic.is_object()) {
    throw std::invalid_argument("'arabic' must be an object");
  }
  for (const auto& [key, value] : arabic.items()) {
    const AttrSet attrs = vocab.parse_key(key);
    if (!entry.realizations.emplace(attrs, value.get<std::string>()).second) {
      throw std::invalid_argument("realization key '" + key +
                                  "' given twice");
    }
  }
  if (record.contains("clitic")) entry.clitic = record.at("clitic").get<bool>();
  return entry;
}

void extend_vocabulary(const json& record, Vocabulary& vocab) {
  if (record.contains("categories")) {
    for (const auto& c : record.at("categories").get<std::vector<std::string>>()) {
      vocab.add_category(c);
    }
  }
  if (record.contains("attributes")) {
    for (const auto& a : record.at("attributes").get<std::vector<std::string>>()) {
      vocab.add_attribute(a);
    }
  }
}

}  // namespace

Lexicon Lexicon::load(std::istream& in, std::string_view source,
                      Vocabulary vocabulary) {
  Lexicon lexicon(std::move(vocabulary));
  detail::for_each_record(in, source, [&](const json& record) {
    if (record.contains("vocabulary")) {
      if (!lexicon.entries_.empty()) {
        throw std::invalid_argument(
            "vocabulary record must precede all entries");
      }
      extend_vocabulary(record.at("vocabulary"), lexicon.vocabulary_);
      return;
    }
    lexicon.add(parse_entry(record, lexicon.vocabulary_));
  });
  return lexicon;
}

Lexicon Lexicon::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError(path, 0, "cannot open file");
  return load(in, path);
}

Realization realize(const LexEntry& entry, const AttrSet& target_attrs) {
  auto it = entry.realizations.find(target_attrs);
  if (it == entry.realizations.end()) {
    it = entry.realizations.find(AttrSet{});
  }
  return {it->second, entry.clitic};
}

std::vector<AffixRule> load_affix_rules(std::istream& in,
                                        const Vocabulary& vocabulary,
                                        std::string_view source) {
  std::vector<AffixRule> rules;
  detail::for_each_record(in, source, [&](const json& record) {
    AffixRule rule;
    const auto kind = record.at("kind").get<std::string>();
    if (kind == "prefix") {
      rule.kind = AffixRule::Kind::prefix;
    } else if (kind == "suffix") {
      rule.kind = AffixRule::Kind::suffix;
    } else {
      throw std::invalid_argument("kind must be 'prefix' or 'suffix', got '" +
                                  kind + "'");
    }
    rule.affix = text::to_lower(record.at("affix").get<std::string>());
    if (rule.affix.empty()) throw std::invalid_argument("empty affix");
    rule.applies_to = vocabulary.category(record.at("category").get<std::string>());
    if (record.contains("add_attrs")) {
      rule.add_attrs =
          vocabulary.attrs(record.at("add_attrs").get<std::vector<std::string>>());
    }
    if (record.contains("replace_with")) {
      rule.replace_with =
          text::to_lower(record.at("replace_with").get<std::string>());
    }
    rules.push_back(std::move(rule));
  });
  return rules;
}

std::vector<AffixRule> load_affix_rules_file(const std::string& path,
                                             const Vocabulary& vocabulary) {
  std::ifstream in(path);
  if (!in) throw DataError(path, 0, "cannot open file");
  return load_affix_rules(in, vocabulary, path);
}

Analyzer::Analyzer(const Lexicon& lexicon, std::vector<AffixRule> rules)
    : lexicon_(&lexicon), rules_(std::move(rules)) {
  for (const AffixRule& r : rules_) {
    (r.kind == AffixRule::Kind::prefix ? prefixes_ : suffixes_).push_back(&r);
  }
  const auto longer = [](const AffixRule* a, const AffixRule* b) {
    return a->affix.size() > b->affix.size();
  };
  std::stable_sort(prefixes_.begin(), prefixes_.end(), longer);
  std::stable_sort(suffixes_.begin(), suffixes_.end(), longer);
}

const LexEntry* Analyzer::find(std::string_view stem, const AffixRule* prefix,
                               const AffixRule* suffix) const {
  if (stem.empty()) return nullptr;
  for (const LexEntry* e : lexicon_->lookup(stem)) {
    if (prefix && e->category != prefix->applies_to) continue;
    if (suffix && e->category != suffix->applies_to) continue;
    return e;
  }
  return nullptr;
}

namespace {

std::optional<std::string> strip(std::string_view word, const AffixRule& r) {
  if (word.size() <= r.affix.size()) return std::nullopt;
  if (r.kind == AffixRule::Kind::prefix) {
    if (!word.starts_with(r.affix)) return std::nullopt;
    return r.replace_with + std::string(word.substr(r.affix.size()));
  }
  if (!word.ends_with(r.affix)) return std::nullopt;
  return std::string(word.substr(0, word.size() - r.affix.size())) +
         r.replace_with;
}

}  // namespace

TaggedWord Analyzer::analyze_word(std::string_view surface) const {
  const std::string word = text::to_lower(surface);
  const auto hit = [&](const LexEntry* e, const AffixRule* p,
                       const AffixRule* s) {
    AttrSet attrs = e->base_attrs;
    if (p) attrs |= p->add_attrs;
    if (s) attrs |= s->add_attrs;
    return TaggedWord{std::string(surface), e->lemma, Tag{e->category, attrs}};
  };

  if (const LexEntry* e = find(word, nullptr, nullptr)) {
    return hit(e, nullptr, nullptr);
  }
  for (const AffixRule* p : prefixes_) {
    const auto stem = strip(word, *p);
    if (!stem) continue;
    if (const LexEntry* e = find(*stem, p, nullptr)) return hit(e, p, nullptr);
    for (const AffixRule* s : suffixes_) {
      const auto inner = strip(*stem, *s);
      if (!inner) continue;
      if (const LexEntry* e = find(*inner, p, s)) return hit(e, p, s);
    }
  }
  for (const AffixRule* s : suffixes_) {
    const auto stem = strip(word, *s);
    if (!stem) continue;
    if (const LexEntry* e = find(*stem, nullptr, s)) return hit(e, nullptr, s);
  }
  return TaggedWord{std::string(surface), std::string(surface),
                    Tag{lexicon_->vocabulary().unk(), AttrSet{}}};
}

std::vector<TaggedWord> Analyzer::analyze_sentence(std::string_view text) const {
  std::vector<TaggedWord> out;
  for (std::string_view token : text::split_whitespace(text)) {
    token = text::strip_punctuation(token);
    if (token.empty()) continue;
    out.push_back(analyze_word(token));
  }
  return out;
}

}  // namespace chunklate
