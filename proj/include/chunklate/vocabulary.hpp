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

#ifndef CHUNKLATE_VOCABULARY_HPP
#define CHUNKLATE_VOCABULARY_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chunklate {

// Index into Vocabulary::categories().
struct Category {
  std::uint8_t id = 0;

  friend auto operator<=>(const Category&, const Category&) = default;
};

// Index into Vocabulary::attributes().
struct AttrId {
  std::uint8_t id = 0;

  friend auto operator<=>(const AttrId&, const AttrId&) = default;
};

// A set of attribute tokens. Iteration and formatting follow vocabulary
// order, which is also the canonical key order ("pl,f", "s,f").
class AttrSet {
 public:
  static constexpr std::size_t kCapacity = 64;

  AttrSet() = default;

  bool empty() const { return bits_ == 0; }
  std::size_t size() const;
  bool contains(AttrId a) const { return (bits_ >> a.id) & 1U; }
  void insert(AttrId a) { bits_ |= std::uint64_t{1} << a.id; }

  bool is_subset_of(const AttrSet& other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  AttrSet operator|(const AttrSet& other) const {
    AttrSet r;
    r.bits_ = bits_ | other.bits_;
    return r;
  }
  AttrSet& operator|=(const AttrSet& other) {
    bits_ |= other.bits_;
    return *this;
  }

  std::vector<AttrId> members() const;
  std::uint64_t bits() const { return bits_; }

  friend auto operator<=>(const AttrSet&, const AttrSet&) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Word pattern: lexical category plus attributes.
struct Tag {
  Category category;
  AttrSet attrs;

  friend bool operator==(const Tag&, const Tag&) = default;
};

// Closed list of lexical categories and attribute tokens. Loaded with
// the lexicon and shared by every component that parses tags.
class Vocabulary {
 public:
  // art n v be adj prep poss unk / def s pl m f 1 2 3 p ing source pmean
  static Vocabulary standard();

  // Both return the existing entry when the name is already present.
  Category add_category(std::string_view name);
  AttrId add_attribute(std::string_view name);

  std::optional<Category> find_category(std::string_view name) const;
  std::optional<AttrId> find_attribute(std::string_view name) const;

  // Throws std::invalid_argument naming the unknown token.
  Category category(std::string_view name) const;
  AttrSet attrs(std::span<const std::string> names) const;

  // Parses a realization key: "default" (or "") is the empty set, otherwise
  // comma-separated tokens in any order with surrounding spaces ignored.
  AttrSet parse_key(std::string_view key) const;

  Category unk() const { return unk_; }

  const std::string& name(Category c) const { return categories_.at(c.id); }
  const std::string& name(AttrId a) const { return attributes_.at(a.id); }

  const std::vector<std::string>& categories() const { return categories_; }
  const std::vector<std::string>& attributes() const { return attributes_; }

  // "pl,f"; empty set gives "".
  std::string key(const AttrSet& attrs) const;
  // "n [pl,f]"; empty set gives "adj []".
  std::string format(const Tag& tag) const;
  // Category names joined by spaces with attribute keys; the index key for
  // exact tag-sequence comparison.
  std::string canonical_key(std::span<const Tag> tags) const;

 private:
  std::vector<std::string> categories_;
  std::vector<std::string> attributes_;
  Category unk_;
};

}  // namespace chunklate

#endif  // CHUNKLATE_VOCABULARY_HPP
