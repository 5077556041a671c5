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

#include "chunklate/engine.hpp"

#include <algorithm>

#include "chunklate/error.hpp"

namespace chunklate {

std::vector<std::string> TranslationResult::outputs() const {
  std::vector<std::string> out;
  out.reserve(generations.size());
  for (const Generation& g : generations) out.push_back(g.rendered.text);
  return out;
}

Translator::Translator(Lexicon lexicon, std::vector<AffixRule> rules,
                       Corpus corpus)
    : lexicon_(std::make_unique<const Lexicon>(std::move(lexicon))),
      analyzer_(std::make_unique<const Analyzer>(*lexicon_, std::move(rules))),
      corpus_(std::make_unique<const Corpus>(std::move(corpus))) {}

Translator Translator::load(const std::string& lexicon_path,
                            const std::string& affix_path,
                            const std::string& corpus_path) {
  Lexicon lexicon = Lexicon::load_file(lexicon_path);
  auto rules = load_affix_rules_file(affix_path, lexicon.vocabulary());
  Corpus corpus = Corpus::load_file(corpus_path, lexicon.vocabulary());
  return Translator(std::move(lexicon), std::move(rules), std::move(corpus));
}

TranslationResult Translator::translate(std::string_view sentence,
                                        const TranslateOptions& options) const {
  TranslationResult r;
  r.sentence = std::string(sentence);
  r.tagged = analyzer_->analyze_sentence(sentence);
  const std::size_t n = r.tagged.size();
  r.span_count = enumerate_spans(n).size();
  r.chunks = find_chunks(r.tagged, *corpus_);

  std::vector<std::string> words;
  words.reserve(n);
  for (const TaggedWord& w : r.tagged) words.push_back(w.surface);
  r.raw_matrix = build_matrix(r.chunks, n, std::move(words));
  r.tuned_matrix = tune(r.raw_matrix, &r.tuning);

  r.lattice = Lattice::from_matrix(r.tuned_matrix);
  r.enumeration = enumerate_paths(r.lattice, options.max_paths);
  r.optimal = select_optimal(r.lattice, options.max_paths);
  for (const Path& p : r.optimal) {
    r.generations.push_back(generate_path(r.lattice, p, r.tagged, *lexicon_,
                                          options.dummy_policy));
  }
  return r;
}

std::vector<RoundTrip> round_trip(const Corpus& corpus,
                                  const Analyzer& analyzer) {
  std::vector<RoundTrip> out;
  for (const TemplatePair& p : corpus.pairs()) {
    if (!p.en_example || !p.ar_example) continue;
    RoundTrip rt{p.id, *p.ar_example, {}, {}};
    const auto words = analyzer.analyze_sentence(*p.en_example);
    std::vector<Tag> tags;
    for (const TaggedWord& w : words) tags.push_back(w.tag);
    const auto matches = corpus.match_exact(tags);
    if (std::find(matches.begin(), matches.end(), &p) == matches.end()) {
      rt.error = "English example does not match its template";
    } else {
      try {
        const GeneratedChunk chunk =
            execute(p.ar_template, words, analyzer.lexicon(), p.id);
        rt.produced = render(std::span(&chunk, 1)).text;
      } catch (const GenerationError& e) {
        rt.error = e.what();
      }
    }
    out.push_back(std::move(rt));
  }
  return out;
}

}  // namespace chunklate
