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

#include "chunklate/vocabulary.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "chunklate/text.hpp"

namespace chunklate {

std::size_t AttrSet::size() const {
  return static_cast<std::size_t>(std::popcount(bits_));
}

std::vector<AttrId> AttrSet::members() const {
  std::vector<AttrId> out;
  for (std::size_t i = 0; i < kCapacity; ++i) {
    if ((bits_ >> i) & 1U) out.push_back(AttrId{static_cast<std::uint8_t>(i)});
  }
  return out;
}

Vocabulary Vocabulary::standard() {
  Vocabulary v;
  for (const char* c : {"art", "n", "v", "be", "adj", "prep", "poss", "unk"}) {
    v.add_category(c);
  }
  for (const char* a : {"def", "s", "pl", "m", "f", "1", "2", "3", "p", "ing",
                        "source", "pmean"}) {
    v.add_attribute(a);
  }
  v.unk_ = *v.find_category("unk");
  return v;
}

Category Vocabulary::add_category(std::string_view name) {
  if (auto existing = find_category(name)) return *existing;
  if (name.empty() || categories_.size() >= 255) {
    throw std::invalid_argument("cannot add category '" + std::string(name) +
                                "'");
  }
  categories_.emplace_back(name);
  return Category{static_cast<std::uint8_t>(categories_.size() - 1)};
}

AttrId Vocabulary::add_attribute(std::string_view name) {
  if (auto existing = find_attribute(name)) return *existing;
  if (name.empty() || name.find(',') != std::string_view::npos ||
      name == "default" || attributes_.size() >= AttrSet::kCapacity) {
    throw std::invalid_argument("cannot add attribute '" + std::string(name) +
                                "'");
  }
  attributes_.emplace_back(name);
  return AttrId{static_cast<std::uint8_t>(attributes_.size() - 1)};
}

std::optional<Category> Vocabulary::find_category(std::string_view name) const {
  const auto it = std::find(categories_.begin(), categories_.end(), name);
  if (it == categories_.end()) return std::nullopt;
  return Category{static_cast<std::uint8_t>(it - categories_.begin())};
}

std::optional<AttrId> Vocabulary::find_attribute(std::string_view name) const {
  const auto it = std::find(attributes_.begin(), attributes_.end(), name);
  if (it == attributes_.end()) return std::nullopt;
  return AttrId{static_cast<std::uint8_t>(it - attributes_.begin())};
}

Category Vocabulary::category(std::string_view name) const {
  if (auto c = find_category(name)) return *c;
  throw std::invalid_argument("unknown category '" + std::string(name) + "'");
}

AttrSet Vocabulary::attrs(std::span<const std::string> names) const {
  AttrSet out;
  for (const auto& name : names) {
    auto a = find_attribute(name);
    if (!a) {
      throw std::invalid_argument("unknown attribute '" + name + "'");
    }
    out.insert(*a);
  }
  return out;
}

AttrSet Vocabulary::parse_key(std::string_view key) const {
  key = text::trim(key);
  AttrSet out;
  if (key.empty() || key == "default") return out;
  while (true) {
    const auto comma = key.find(',');
    const std::string_view token = text::trim(key.substr(0, comma));
    auto a = find_attribute(token);
    if (!a) {
      throw std::invalid_argument("unknown attribute '" + std::string(token) +
                                  "'");
    }
    out.insert(*a);
    if (comma == std::string_view::npos) break;
    key.remove_prefix(comma + 1);
  }
  return out;
}

std::string Vocabulary::key(const AttrSet& attrs) const {
  std::string out;
  for (AttrId a : attrs.members()) {
    if (!out.empty()) out += ',';
    out += name(a);
  }
  return out;
}

std::string Vocabulary::format(const Tag& tag) const {
  return name(tag.category) + " [" + key(tag.attrs) + "]";
}

std::string Vocabulary::canonical_key(std::span<const Tag> tags) const {
  std::string out;
  for (const Tag& t : tags) {
    if (!out.empty()) out += ' ';
    out += name(t.category);
    out += '[';
    out += key(t.attrs);
    out += ']';
  }
  return out;
}

}  // namespace chunklate
