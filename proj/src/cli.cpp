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

#include "chunklate/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "chunklate/engine.hpp"
#include "chunklate/error.hpp"
#include "chunklate/trace.hpp"

namespace chunklate::cli {

namespace {

struct DataPaths {
  std::string lexicon;
  std::string affixes;
  std::string corpus;

  // Fills unset paths from $CHUNKLATE_DATA.
  void apply_defaults() {
    const char* dir = std::getenv("CHUNKLATE_DATA");
    if (!dir || !*dir) return;
    const std::filesystem::path base(dir);
    if (lexicon.empty()) lexicon = (base / "lexicon.jsonl").string();
    if (affixes.empty()) affixes = (base / "affixes.jsonl").string();
    if (corpus.empty()) corpus = (base / "corpus.jsonl").string();
  }
};

void add_data_options(CLI::App& cmd, DataPaths& paths, bool corpus,
                      bool affixes) {
  cmd.add_option("--lexicon", paths.lexicon, "Lexicon JSON Lines file");
  if (affixes) {
    cmd.add_option("--affixes", paths.affixes, "Affix rule JSON Lines file");
  }
  if (corpus) {
    cmd.add_option("--corpus", paths.corpus, "Template corpus JSON Lines file");
  }
}

void require(const std::string& path, const char* what) {
  if (path.empty()) {
    throw DataError(what, 0,
                    std::string("no ") + what +
                        " file given (use --" + what +
                        " or set CHUNKLATE_DATA)");
  }
}

struct TranslateArgs {
  std::vector<std::string> words;
  bool all = false;
  bool trace = false;
  std::string dummy_policy = "suppress-copula";
  std::size_t max_paths = kDefaultMaxPaths;
  std::string format = "text";
  std::string dot_path;
};

void add_translate_options(CLI::App& cmd, TranslateArgs& a, bool trace_alias) {
  cmd.add_option("sentence", a.words, "English sentence")->required();
  cmd.add_flag("--all", a.all, "Print every co-optimal translation");
  cmd.add_option("--dummy-policy", a.dummy_policy,
                 "copy | suppress-copula")
      ->check(CLI::IsMember({"copy", "suppress-copula"}));
  cmd.add_option("--max-paths", a.max_paths, "Path enumeration cap")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--dot", a.dot_path, "Write the lattice as Graphviz DOT");
  if (!trace_alias) {
    cmd.add_flag("--trace", a.trace, "Print the stage trace as JSON on stderr");
    cmd.add_option("--format", a.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
  }
}

int run_translate(DataPaths paths, const TranslateArgs& a, std::ostream& out,
                  std::ostream& err) {
  paths.apply_defaults();
  require(paths.lexicon, "lexicon");
  require(paths.affixes, "affixes");
  require(paths.corpus, "corpus");
  const Translator translator =
      Translator::load(paths.lexicon, paths.affixes, paths.corpus);

  std::string sentence;
  for (const auto& w : a.words) {
    if (!sentence.empty()) sentence += ' ';
    sentence += w;
  }
  TranslateOptions options;
  options.dummy_policy = *parse_dummy_policy(a.dummy_policy);
  options.max_paths = a.max_paths;
  const TranslationResult result = translator.translate(sentence, options);

  if (a.trace) {
    err << trace_report(result, translator.lexicon().vocabulary()).dump(2)
        << '\n';
  }
  if (!a.dot_path.empty()) {
    std::ofstream dot(a.dot_path);
    if (!dot) throw DataError(a.dot_path, 0, "cannot write file");
    dot << to_dot(result.lattice);
  }
  for (const Generation& g : result.generations) {
    for (const auto& w : g.rendered.warnings) err << "warning: " << w << '\n';
    if (!a.all) break;
  }

  auto outputs = result.outputs();
  if (!a.all && outputs.size() > 1) outputs.resize(1);
  if (a.format == "json") {
    out << nlohmann::json{{"translations", outputs}}.dump() << '\n';
  } else {
    for (const auto& line : outputs) out << line << '\n';
  }
  return kExitOk;
}

int run_validate(DataPaths paths, std::ostream& out) {
  const bool affixes_given = !paths.affixes.empty();
  paths.apply_defaults();
  require(paths.lexicon, "lexicon");
  require(paths.corpus, "corpus");

  const Lexicon lexicon = Lexicon::load_file(paths.lexicon);
  std::vector<AffixRule> rules;
  // Affixes are optional here; a default-directory file is used if present.
  if (affixes_given || (!paths.affixes.empty() &&
                        std::filesystem::exists(paths.affixes))) {
    rules = load_affix_rules_file(paths.affixes, lexicon.vocabulary());
  }
  const Corpus corpus = Corpus::load_file(paths.corpus, lexicon.vocabulary());
  const Analyzer analyzer(lexicon, std::move(rules));

  if (corpus.empty()) out << "warning: empty corpus\n";

  const ValidationReport report = validate(corpus);
  for (const auto& d : report.dangling) {
    out << "dangling reference: pair " << d.pair_id << " refers to "
        << d.reference << " absent from its English template\n";
  }
  for (const auto& g : report.duplicates) {
    out << "note: duplicate templates in pairs";
    for (int id : g.pair_ids) out << ' ' << id;
    out << '\n';
  }

  std::size_t failures = 0;
  const auto trips = round_trip(corpus, analyzer);
  for (const RoundTrip& rt : trips) {
    if (rt.ok()) continue;
    ++failures;
    out << "round trip: pair " << rt.pair_id << ": ";
    if (!rt.error.empty()) {
      out << rt.error << '\n';
    } else {
      out << "produced \"" << rt.produced << "\", expected \"" << rt.expected
          << "\"\n";
    }
  }

  const bool clean = report.clean() && failures == 0;
  out << (clean ? "ok" : "failed") << ": " << corpus.size() << " pairs, "
      << report.dangling.size() << " dangling references, " << trips.size()
      << " round trips (" << failures << " failed)\n";
  return clean ? kExitOk : kExitFindings;
}

int run_lookup(DataPaths paths, const std::string& word, std::ostream& out) {
  const bool affixes_given = !paths.affixes.empty();
  paths.apply_defaults();
  require(paths.lexicon, "lexicon");
  const Lexicon lexicon = Lexicon::load_file(paths.lexicon);
  std::vector<AffixRule> rules;
  if (affixes_given || (!paths.affixes.empty() &&
                        std::filesystem::exists(paths.affixes))) {
    rules = load_affix_rules_file(paths.affixes, lexicon.vocabulary());
  }
  const Analyzer analyzer(lexicon, std::move(rules));
  const Vocabulary& vocab = lexicon.vocabulary();

  const TaggedWord w = analyzer.analyze_word(word);
  out << w.lemma << ' ' << vocab.format(w.tag) << '\n';
  for (const LexEntry* e : lexicon.lookup(w.lemma, w.tag.category)) {
    for (const auto& [key, text] : e->realizations) {
      out << "  " << (key.empty() ? "default" : vocab.key(key)) << '\t' << text
          << '\n';
    }
    if (e->clitic) out << "  (proclitic)\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Example-based English to Arabic chunk translator", "chunklate"};
  app.require_subcommand(1);

  DataPaths paths;
  TranslateArgs translate_args;
  TranslateArgs trace_args;
  std::string word;

  auto* translate = app.add_subcommand("translate", "Translate a sentence");
  add_data_options(*translate, paths, true, true);
  add_translate_options(*translate, translate_args, false);

  auto* trace = app.add_subcommand(
      "trace", "Translate with the JSON stage trace (translate --trace "
               "--format=json)");
  add_data_options(*trace, paths, true, true);
  add_translate_options(*trace, trace_args, true);

  auto* validate_cmd =
      app.add_subcommand("validate", "Check a corpus against a lexicon");
  add_data_options(*validate_cmd, paths, true, true);

  auto* lookup = app.add_subcommand("lookup", "Analyze one English word");
  add_data_options(*lookup, paths, false, true);
  lookup->add_option("word", word, "English word")->required();

  try {
    std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1),
                                  args.end());
    std::reverse(rest.begin(), rest.end());
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitDataError;
  }

  try {
    if (*translate) return run_translate(paths, translate_args, out, err);
    if (*trace) {
      trace_args.trace = true;
      trace_args.format = "json";
      return run_translate(paths, trace_args, out, err);
    }
    if (*validate_cmd) return run_validate(paths, out);
    if (*lookup) return run_lookup(paths, word, out);
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  } catch (const GenerationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  } catch (const NoPathError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFindings;
  }
  return kExitDataError;
}

}  // namespace chunklate::cli
