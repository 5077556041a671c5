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

#ifndef CHUNKLATE_CORPUS_HPP
#define CHUNKLATE_CORPUS_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chunklate/arabic_template.hpp"
#include "chunklate/vocabulary.hpp"

namespace chunklate {

// One aligned corpus record: an English tag-sequence template and the
// Arabic generation commands that translate it.
struct TemplatePair {
  int id = 0;
  std::vector<Tag> en_template;
  std::string ar_template_text;
  ArabicTemplate ar_template;
  std::optional<std::string> en_example;
  std::optional<std::string> ar_example;
};

// Pairs are immutable after construction and never move, so pointers
// returned by match_exact stay valid for the corpus lifetime.
class Corpus {
 public:
  Corpus() = default;
  // Throws std::invalid_argument on duplicate ids or empty templates.
  Corpus(Vocabulary vocabulary, std::vector<TemplatePair> pairs);

  Corpus(const Corpus&) = delete;
  Corpus& operator=(const Corpus&) = delete;
  Corpus(Corpus&&) = default;
  Corpus& operator=(Corpus&&) = default;

  // JSON Lines; throws DataError with the line number.
  static Corpus load(std::istream& in, const Vocabulary& vocabulary,
                     std::string_view source = "corpus");
  static Corpus load_file(const std::string& path,
                          const Vocabulary& vocabulary);

  // Pairs of the same length whose template tags have the same category and
  // an attribute subset of the query tag at every position. Corpus order.
  std::vector<const TemplatePair*> match_exact(std::span<const Tag> query) const;

  const TemplatePair* find(int id) const;

  const std::vector<TemplatePair>& pairs() const { return pairs_; }
  const Vocabulary& vocabulary() const { return vocabulary_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  // Bucket key: the category sequence alone. Attribute subsumption is
  // checked within the bucket.
  std::string bucket_key(std::span<const Tag> tags) const;

 private:
  Vocabulary vocabulary_ = Vocabulary::standard();
  std::vector<TemplatePair> pairs_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> index_;
  std::map<int, std::size_t> by_id_;
};

// A category reference in the Arabic template names a category/ordinal that
// the English template does not provide.
struct DanglingReference {
  int pair_id = 0;
  std::string reference;  // "n1"
};

// Pairs sharing both the English and the Arabic template.
struct DuplicateGroup {
  std::vector<int> pair_ids;
};

struct ValidationReport {
  std::vector<DanglingReference> dangling;
  std::vector<DuplicateGroup> duplicates;

  // Dangling references make a corpus unusable; duplicate groups are
  // redundancy that tuning removes and are reported for information only.
  bool clean() const { return dangling.empty(); }
};

ValidationReport validate(const Corpus& corpus);

}  // namespace chunklate

#endif  // CHUNKLATE_CORPUS_HPP
