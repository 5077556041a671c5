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

#include "chunklate/corpus.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

#include "chunklate/error.hpp"
#include "json_lines.hpp"

namespace chunklate {

using nlohmann::json;

Corpus::Corpus(Vocabulary vocabulary, std::vector<TemplatePair> pairs)
    : vocabulary_(std::move(vocabulary)), pairs_(std::move(pairs)) {
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    const TemplatePair& p = pairs_[i];
    if (p.en_template.empty()) {
      throw std::invalid_argument("pair " + std::to_string(p.id) +
                                  " has an empty English template");
    }
    if (!by_id_.emplace(p.id, i).second) {
      throw std::invalid_argument("duplicate pair id " + std::to_string(p.id));
    }
    index_[bucket_key(p.en_template)].push_back(i);
  }
}

std::string Corpus::bucket_key(std::span<const Tag> tags) const {
  std::string key;
  for (const Tag& t : tags) {
    if (!key.empty()) key += ' ';
    key += vocabulary_.name(t.category);
  }
  return key;
}

std::vector<const TemplatePair*> Corpus::match_exact(
    std::span<const Tag> query) const {
  std::vector<const TemplatePair*> out;
  if (query.empty()) return out;
  const auto it = index_.find(bucket_key(query));
  if (it == index_.end()) return out;
  for (std::size_t i : it->second) {
    const TemplatePair& p = pairs_[i];
    bool ok = true;
    for (std::size_t k = 0; ok && k < query.size(); ++k) {
      ok = p.en_template[k].category == query[k].category &&
           p.en_template[k].attrs.is_subset_of(query[k].attrs);
    }
    if (ok) out.push_back(&p);
  }
  return out;
}

const TemplatePair* Corpus::find(int id) const {
  const auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &pairs_[it->second];
}

namespace {

TemplatePair parse_pair(const json& record, const Vocabulary& vocab) {
  TemplatePair p;
  p.id = record.at("id").get<int>();
  const json& en = record.at("en_template");
  if (!en.is_array() || en.empty()) {
    throw std::invalid_argument("en_template must be a non-empty array");
  }
  for (const json& tag : en) {
    Tag t;
    t.category = vocab.category(tag.at("cat").get<std::string>());
    if (tag.contains("attrs")) {
      t.attrs = vocab.attrs(tag.at("attrs").get<std::vector<std::string>>());
    }
    p.en_template.push_back(t);
  }
  p.ar_template_text = record.at("ar_template").get<std::string>();
  p.ar_template = parse_template(p.ar_template_text, vocab);
  if (record.contains("en_example")) {
    p.en_example = record.at("en_example").get<std::string>();
  }
  if (record.contains("ar_example")) {
    p.ar_example = record.at("ar_example").get<std::string>();
  }
  return p;
}

}  // namespace

Corpus Corpus::load(std::istream& in, const Vocabulary& vocabulary,
                    std::string_view source) {
  std::vector<TemplatePair> pairs;
  std::set<int> ids;
  detail::for_each_record(in, source, [&](const json& record) {
    TemplatePair p = parse_pair(record, vocabulary);
    if (!ids.insert(p.id).second) {
      throw std::invalid_argument("duplicate pair id " + std::to_string(p.id));
    }
    pairs.push_back(std::move(p));
  });
  return Corpus(vocabulary, std::move(pairs));
}

Corpus Corpus::load_file(const std::string& path, const Vocabulary& vocabulary) {
  std::ifstream in(path);
  if (!in) throw DataError(path, 0, "cannot open file");
  return load(in, vocabulary, path);
}

ValidationReport validate(const Corpus& corpus) {
  const Vocabulary& vocab = corpus.vocabulary();
  ValidationReport report;
  std::map<std::string, std::size_t> group_of;

  for (const TemplatePair& p : corpus.pairs()) {
    for (const auto& group : p.ar_template.groups) {
      for (const GenCommand& cmd : group) {
        const auto* ref = std::get_if<CategoryRef>(&cmd);
        if (!ref) continue;
        std::size_t available = 0;
        for (const Tag& t : p.en_template) {
          if (t.category == ref->category) ++available;
        }
        if (available < ref->ordinal) {
          report.dangling.push_back(
              {p.id, vocab.name(ref->category) + std::to_string(ref->ordinal)});
        }
      }
    }

    const std::string key = vocab.canonical_key(p.en_template) + " => " +
                            format_template(p.ar_template, vocab);
    const auto [it, inserted] =
        group_of.emplace(key, report.duplicates.size());
    if (inserted) report.duplicates.push_back({});
    report.duplicates[it->second].pair_ids.push_back(p.id);
  }

  std::erase_if(report.duplicates,
                [](const DuplicateGroup& g) { return g.pair_ids.size() < 2; });
  return report;
}

}  // namespace chunklate
