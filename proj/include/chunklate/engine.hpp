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

#ifndef CHUNKLATE_ENGINE_HPP
#define CHUNKLATE_ENGINE_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "chunklate/corpus.hpp"
#include "chunklate/lattice.hpp"
#include "chunklate/lexicon.hpp"
#include "chunklate/matcher.hpp"
#include "chunklate/transfer_gen.hpp"

namespace chunklate {

struct TranslateOptions {
  DummyPolicy dummy_policy = DummyPolicy::suppress_copula;
  std::size_t max_paths = kDefaultMaxPaths;
};

// Every intermediate stage of one sentence. Chunk instances point into the
// Translator's corpus, so a result must not outlive its Translator.
struct TranslationResult {
  std::string sentence;
  std::vector<TaggedWord> tagged;
  std::size_t span_count = 0;
  std::vector<ChunkInstance> chunks;
  CorrespondenceMatrix raw_matrix;
  TuningLog tuning;
  CorrespondenceMatrix tuned_matrix;
  Lattice lattice;
  PathEnumeration enumeration;
  std::vector<Path> optimal;
  std::vector<Generation> generations;  // parallel to `optimal`

  std::vector<std::string> outputs() const;
};

class Translator {
 public:
  Translator(Lexicon lexicon, std::vector<AffixRule> rules, Corpus corpus);

  // The corpus is parsed against the lexicon's vocabulary.
  static Translator load(const std::string& lexicon_path,
                         const std::string& affix_path,
                         const std::string& corpus_path);

  TranslationResult translate(std::string_view sentence,
                              const TranslateOptions& options = {}) const;

  const Lexicon& lexicon() const { return *lexicon_; }
  const Analyzer& analyzer() const { return *analyzer_; }
  const Corpus& corpus() const { return *corpus_; }

 private:
  std::unique_ptr<const Lexicon> lexicon_;
  std::unique_ptr<const Analyzer> analyzer_;
  std::unique_ptr<const Corpus> corpus_;
};

// Result of executing one pair's Arabic template on its own analyzed English
// example. Only pairs carrying both examples are checked.
struct RoundTrip {
  int pair_id = 0;
  std::string expected;
  std::string produced;
  // Empty on success; otherwise why the example could not be generated.
  std::string error;

  bool ok() const { return error.empty() && produced == expected; }
};

std::vector<RoundTrip> round_trip(const Corpus& corpus, const Analyzer& analyzer);

}  // namespace chunklate

#endif  // CHUNKLATE_ENGINE_HPP
