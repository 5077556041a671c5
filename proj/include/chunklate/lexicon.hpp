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

#ifndef CHUNKLATE_LEXICON_HPP
#define CHUNKLATE_LEXICON_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chunklate/vocabulary.hpp"

namespace chunklate {

struct LexEntry {
  std::string lemma;  // lowercased
  Category category;
  AttrSet base_attrs;
  // Keyed by Arabic-side attribute set; the empty set is the default.
  std::map<AttrSet, std::string> realizations;
  bool clitic = false;
};

struct TaggedWord {
  std::string surface;
  std::string lemma;
  Tag tag;
};

struct AffixRule {
  enum class Kind { prefix, suffix };

  Kind kind = Kind::suffix;
  std::string affix;
  Category applies_to;
  AttrSet add_attrs;
  // Restores the stem after stripping, e.g. "ies" -> "y".
  std::string replace_with;
};

struct Realization {
  std::string text;
  bool clitic = false;
};

class Lexicon {
 public:
  explicit Lexicon(Vocabulary vocabulary = Vocabulary::standard());

  // JSON Lines. A record of the form {"vocabulary": {"categories": [...],
  // "attributes": [...]}} extends the vocabulary for the records after it.
  // Throws DataError with the offending line number.
  static Lexicon load(std::istream& in, std::string_view source = "lexicon",
                      Vocabulary vocabulary = Vocabulary::standard());
  static Lexicon load_file(const std::string& path);

  // Throws std::invalid_argument on a duplicate (lemma, category) or a
  // realization table without a default.
  void add(LexEntry entry);

  // Case-insensitive lemma match, in insertion order.
  std::vector<const LexEntry*> lookup(
      std::string_view lemma,
      std::optional<Category> category = std::nullopt) const;

  const Vocabulary& vocabulary() const { return vocabulary_; }
  const std::vector<LexEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  Vocabulary vocabulary_;
  std::vector<LexEntry> entries_;
  std::multimap<std::string, std::size_t, std::less<>> by_lemma_;
};

// Exact key if present, otherwise the default realization.
Realization realize(const LexEntry& entry, const AttrSet& target_attrs);

std::vector<AffixRule> load_affix_rules(std::istream& in,
                                        const Vocabulary& vocabulary,
                                        std::string_view source = "affixes");
std::vector<AffixRule> load_affix_rules_file(const std::string& path,
                                             const Vocabulary& vocabulary);

// Dictionary lookup with bounded affix stripping: direct lookup, then each
// prefix (alone, then combined with each suffix), then each suffix alone.
// Longer affixes are tried first within each kind.
class Analyzer {
 public:
  Analyzer(const Lexicon& lexicon, std::vector<AffixRule> rules);

  TaggedWord analyze_word(std::string_view surface) const;
  std::vector<TaggedWord> analyze_sentence(std::string_view text) const;

  const Lexicon& lexicon() const { return *lexicon_; }
  const std::vector<AffixRule>& rules() const { return rules_; }

 private:
  const LexEntry* find(std::string_view stem, const AffixRule* prefix,
                       const AffixRule* suffix) const;

  const Lexicon* lexicon_;
  std::vector<AffixRule> rules_;
  std::vector<const AffixRule*> prefixes_;
  std::vector<const AffixRule*> suffixes_;
};

}  // namespace chunklate

#endif  // CHUNKLATE_LEXICON_HPP
