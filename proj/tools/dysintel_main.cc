// Copyright 2026 The dysintel Authors.
//
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

// dysintel: batch intelligibility scoring, articulatory effort analysis and
// evaluation-subset selection.
//
// Every failure prints one line "error: <kind>: <message>" on stderr and
// exits nonzero (2 for data errors, 64 for usage errors).

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "dysintel/corpus.h"
#include "dysintel/errors.h"
#include "dysintel/phonetics.h"
#include "dysintel/report.h"
#include "dysintel/scoring.h"
#include "dysintel/selection.h"
#include "dysintel/visible_speech.h"

namespace fs = std::filesystem;

namespace dysintel {
namespace {

constexpr int kExitData = 2;
constexpr int kExitUsage = 64;

struct Globals {
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::string vs_table;
  std::string formants;

  const VsTable &Vs() {
    if (vs_table.empty()) return VsTable::Bundled();
    if (!vs_cache) vs_cache = VsTable::LoadFile(vs_table);
    return *vs_cache;
  }
  const FormantTable &Formants() {
    if (formants.empty()) return FormantTable::Bundled();
    if (!formant_cache) formant_cache = FormantTable::LoadFile(formants);
    return *formant_cache;
  }

 private:
  std::optional<VsTable> vs_cache;
  std::optional<FormantTable> formant_cache;
};

std::vector<Metric> MetricsFor(const std::string &name) {
  if (name == "all") return {Metric::kOs, Metric::kSm, Metric::kLd, Metric::kUnk};
  return {ParseMetric(name)};
}

Lexicon LexiconOrBundled(const std::string &path) {
  return path.empty() ? Lexicon::BundledCandidates() : Lexicon::LoadFile(path);
}

void WriteOut(const std::string &path, const std::string &contents) {
  if (path.empty() || path == "-") {
    std::cout << contents;
    return;
  }
  fs::path p(path);
  if (p.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(p.parent_path(), ec);
  }
  std::ofstream out(p, std::ios::binary);
  out << contents;
  if (!out) throw Error(ErrorKind::kIo, fmt::format("cannot write {}", path));
}

// ---- score -------------------------------------------------------------

struct ScoreArgs {
  std::string corpus;
  std::string metric = "all";
  std::string out;
  bool allow_partial = false;
};

int RunScore(const ScoreArgs &a, Globals &g) {
  Corpus corpus = LoadCorpus(CorpusPaths::FromDirectory(a.corpus));
  ScoreOptions opts;
  opts.metrics = MetricsFor(a.metric);
  opts.allow_partial = a.allow_partial;
  opts.workers = g.workers;
  ScoreTable table = ScoreCorpus(corpus, opts);
  CorrelationTable corr = CorrelateCorpus(corpus, opts, StandardGroups());

  ScoreReportFiles files;
  files.scores = &table;
  files.correlations = &corr;
  if (corpus.normalization()) files.normalization = &*corpus.normalization();
  files.validation = &corpus.report();
  WriteScoreReport(a.out, files);

  std::cout << ScoresCsv(table);
  if (!corr.any_computable) std::cout << "correlations: " << kNoCorrelations << "\n";
  for (const std::string &w : corpus.report().warnings) std::cerr << "warning: " << w << "\n";
  return 0;
}

// ---- effort ------------------------------------------------------------

struct EffortArgs {
  std::vector<std::string> words;
  std::string lexicon;
  bool all = false;
  bool histogram = false;
  bool detail = false;
};

std::string HistogramText(const std::map<int, int> &h) {
  std::string out;
  for (const auto &[effort, count] : h)
    out += fmt::format("{}{}:{}", out.empty() ? "" : " ", effort, count);
  return out;
}

int RunEffort(const EffortArgs &a, Globals &g) {
  Lexicon lex = LexiconOrBundled(a.lexicon);
  std::vector<const LexEntry *> entries;
  if (a.words.empty()) {
    for (const auto &[w, e] : lex.entries()) entries.push_back(&e);
  } else {
    for (const std::string &w : a.words) entries.push_back(&lex.Find(w));
  }
  struct Row {
    const LexEntry *entry;
    VsSequence seq;
    int effort;
  };
  std::vector<Row> rows;
  for (const LexEntry *e : entries) {
    VsSequence seq = ArpabetToVs(*e, g.Vs());
    rows.push_back({e, seq, WordEffort(seq)});
  }
  if (a.words.empty()) {
    std::stable_sort(rows.begin(), rows.end(), [](const Row &x, const Row &y) {
      return x.effort != y.effort ? x.effort > y.effort : x.entry->word < y.entry->word;
    });
  }
  for (const Row &r : rows) {
    fmt::print("{}\t{}", r.entry->word, r.effort);
    if (a.histogram) fmt::print("\t{}", HistogramText(EffortHistogram(r.seq)));
    fmt::print("\n");
    if (a.detail) {
      VsVector prev;
      std::size_t k = 0;
      for (const std::string &phone : r.entry->phones) {
        for (const std::string &sym : g.Vs().PhoneSymbols(phone)) {
          VsVector v = r.seq[k++];
          fmt::print("  {:<3} {:<12} {}  {}\n", phone, sym, v.ToString(),
                     TransitionEffort(prev, v));
          prev = v;
        }
      }
    }
  }
  return 0;
}

// ---- traverse ----------------------------------------------------------

struct TraverseArgs {
  std::vector<std::string> words;
  std::string lexicon;
  bool detail = false;
};

int RunTraverse(const TraverseArgs &a, Globals &g) {
  Lexicon lex = LexiconOrBundled(a.lexicon);
  std::vector<const LexEntry *> entries;
  if (a.words.empty()) {
    for (const auto &[w, e] : lex.entries()) entries.push_back(&e);
  } else {
    for (const std::string &w : a.words) entries.push_back(&lex.Find(w));
  }
  for (const LexEntry *e : entries) {
    auto legs = TraversalPath(*e, g.Formants());
    double total = 0.0;
    for (const TraversalLeg &l : legs) total += l.distance;
    fmt::print("{}\t{:.6f}\n", e->word, total);
    if (a.detail) {
      for (const TraversalLeg &l : legs)
        fmt::print("  {:<3} ({:.0f},{:.0f}) -> ({:.0f},{:.0f})  {:.6f}\n", l.vowel,
                   l.from.f1, l.from.f2, l.to.f1, l.to.f2, l.distance);
    }
  }
  return 0;
}

// ---- filter-candidates -------------------------------------------------

struct FilterArgs {
  std::string lexicon;
  FilterOptions options;
  std::string rule = "spelling";
  bool words_only = false;
};

int RunFilter(FilterArgs a, Globals &g) {
  a.options.rule = ParseSyllableRule(a.rule);
  Lexicon lex = LexiconOrBundled(a.lexicon);
  auto rows = EvaluateCandidates(lex, g.Formants(), a.options);
  if (!a.words_only) fmt::print("word\tsyllables\ttraversal\tselected\n");
  for (const CandidateRow &r : rows) {
    if (a.words_only) {
      if (r.selected()) fmt::print("{}\n", r.word);
      continue;
    }
    fmt::print("{}\t{}\t{:.6f}\t{}\n", r.word, r.syllables, r.traversal,
               r.selected() ? "yes" : "no");
  }
  return 0;
}

// ---- select ------------------------------------------------------------

struct SelectArgs {
  std::string corpus;
  std::string candidates;
  std::string preset;
  std::string alphas;
  std::string metric = "sm";
  std::string out;
  bool json = false;
  bool heuristic = false;
  std::size_t max_exhaustive = 24;
  bool signed_correlation = false;
  bool allow_partial = false;
};

int RunSelect(const SelectArgs &a, Globals &g) {
  Alphas alphas = !a.alphas.empty() ? Alphas::Parse(a.alphas)
                  : !a.preset.empty() ? ScenarioAlphas(ParseScenario(a.preset))
                                      : ScenarioAlphas(Scenario::kFull);
  alphas.Validate();
  Lexicon candidates = LexiconOrBundled(a.candidates);
  std::vector<std::string> pool;
  for (const auto &[w, e] : candidates.entries()) pool.push_back(w);

  std::optional<ScoreTable> scores;
  std::optional<Metric> metric;
  if (alphas.a2 != 0.0) {
    if (a.corpus.empty())
      throw Error(ErrorKind::kMissingData,
                  "a correlation weight (a2 > 0) needs --corpus with perceptual scores");
    metric = ParseMetric(a.metric);
    Corpus corpus = LoadCorpus(CorpusPaths::FromDirectory(a.corpus));
    ScoreOptions opts;
    opts.metrics = {*metric};
    opts.allow_partial = a.allow_partial;
    opts.workers = g.workers;
    scores = ScoreCorpus(corpus, opts);
  }
  SelectionProblem problem = BuildSelectionProblem(
      pool, candidates, g.Vs(), scores ? &*scores : nullptr, metric.value_or(Metric::kSm));
  OptimizeOptions opts;
  opts.max_exhaustive_n = a.max_exhaustive;
  opts.allow_heuristic = a.heuristic;
  opts.workers = g.workers;
  opts.cost.signed_correlation = a.signed_correlation;
  SubsetResult result = Optimize(problem, alphas, opts);

  SelectionContext ctx{alphas, metric, problem.pool(), a.signed_correlation};
  std::cout << SelectionText(result, ctx);
  if (!a.out.empty()) WriteOut(a.out, SelectionJson(result, ctx));
  return 0;
}

// ---- correlate ---------------------------------------------------------

struct CorrelateArgs {
  std::string corpus;
  std::string metric = "all";
  std::string out;
  bool allow_partial = false;
};

int RunCorrelate(const CorrelateArgs &a, Globals &g) {
  Corpus corpus = LoadCorpus(CorpusPaths::FromDirectory(a.corpus));
  ScoreOptions opts;
  opts.metrics = MetricsFor(a.metric);
  if (!corpus.has_features())
    std::erase(opts.metrics, Metric::kOs);
  if (opts.metrics.empty())
    throw Error(ErrorKind::kMissingData, "metric os needs feature vectors; the corpus has none");
  opts.allow_partial = a.allow_partial;
  opts.workers = g.workers;
  CorrelationTable table = CorrelateCorpus(corpus, opts, StandardGroups());
  std::string csv = CorrelationsCsv(table);
  std::cout << csv;
  if (!a.out.empty()) WriteOut(a.out, csv);
  return 0;
}

// ---- validate ----------------------------------------------------------

struct ValidateArgs {
  std::string corpus;
  bool strict = false;
};

int RunValidate(const ValidateArgs &a, Globals &) {
  Corpus corpus = LoadCorpus(CorpusPaths::FromDirectory(a.corpus));
  std::size_t dys = corpus.dysarthric_speakers().size();
  fmt::print("speakers\t{} ({} dysarthric, {} healthy)\n", corpus.speakers().size(), dys,
             corpus.speakers().size() - dys);
  fmt::print("utterances\t{}\n", corpus.utterances().size());
  fmt::print("words\t{}\n", corpus.words().size());
  fmt::print("features\t{} x {}\n", corpus.features().size(), corpus.feature_dim());
  for (const std::string &w : corpus.report().warnings) fmt::print("warning\t{}\n", w);
  for (const std::string &x : corpus.report().excluded) fmt::print("excluded\t{}\n", x);
  if (a.strict && !corpus.report().clean())
    throw Error(ErrorKind::kValidation, "corpus has warnings or exclusions (--strict)");
  return 0;
}

int Main(int argc, char **argv) {
  CLI::App app{"Dysarthric speech intelligibility scoring and evaluation-set selection"};
  app.name("dysintel");
  app.require_subcommand(1);
  app.set_config("--config", "", "Read flags from a TOML/INI file ([subcommand] sections)");
  app.allow_config_extras(CLI::config_extras_mode::error);

  Globals g;
  app.add_option("--workers", g.workers, "Worker threads (results do not depend on it)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--vs-table", g.vs_table, "Visible-speech table replacing the built-in one")
      ->envname("DYSINTEL_VS_TABLE");
  app.add_option("--formants", g.formants, "Formant table replacing the built-in one")
      ->envname("DYSINTEL_FORMANTS");

  const std::vector<std::string> metric_names{"os", "sm", "ld", "unk", "all"};
  std::function<int()> run;

  ScoreArgs score;
  auto *sc = app.add_subcommand("score", "Score every speaker and write the report files");
  sc->add_option("--corpus", score.corpus, "Corpus directory")->required();
  sc->add_option("--metric", score.metric, "os|sm|ld|unk|all")
      ->check(CLI::IsMember(metric_names))
      ->capture_default_str();
  sc->add_option("--out", score.out, "Output directory")->required();
  sc->add_flag("--allow-partial", score.allow_partial,
               "os: skip words without features or healthy references");
  sc->callback([&] { run = [&] { return RunScore(score, g); }; });

  EffortArgs effort;
  auto *ef = app.add_subcommand("effort", "Articulatory effort of words");
  ef->add_option("--word", effort.words, "Word(s) to analyse (default: whole lexicon)");
  ef->add_option("--lexicon", effort.lexicon, "Pronunciation lexicon (default: built-in candidates)");
  ef->add_flag("--histogram", effort.histogram, "Also print the transition-effort histogram");
  ef->add_flag("--detail", effort.detail, "Print the per-symbol vector decomposition");
  ef->callback([&] { run = [&] { return RunEffort(effort, g); }; });

  TraverseArgs traverse;
  auto *tr = app.add_subcommand("traverse", "Vowel-space traversal length of words");
  tr->add_option("--word", traverse.words, "Word(s) to analyse (default: whole lexicon)");
  tr->add_option("--lexicon", traverse.lexicon, "Pronunciation lexicon (default: built-in candidates)");
  tr->add_flag("--detail", traverse.detail, "Print every leg of the path");
  tr->callback([&] { run = [&] { return RunTraverse(traverse, g); }; });

  FilterArgs filter;
  auto *fc = app.add_subcommand("filter-candidates", "Apply the syllable and traversal thresholds");
  fc->add_option("--lexicon", filter.lexicon, "Candidate lexicon (default: built-in candidates)");
  fc->add_option("--min-syllables", filter.options.min_syllables, "Keep words with at least this many syllables")
      ->capture_default_str();
  fc->add_option("--min-traversal", filter.options.min_traversal, "Keep words whose traversal exceeds this (Hz)")
      ->capture_default_str();
  fc->add_option("--syllables", filter.rule, "Syllable counting: spelling|phones")
      ->check(CLI::IsMember({"spelling", "phones"}))
      ->capture_default_str();
  fc->add_flag("--words-only", filter.words_only, "Print only the retained words");
  fc->callback([&] { run = [&] { return RunFilter(filter, g); }; });

  SelectArgs select;
  auto *se = app.add_subcommand("select", "Find the lowest-cost evaluation subset");
  se->add_option("--corpus", select.corpus, "Corpus directory (needed when a2 > 0)");
  se->add_option("--candidates", select.candidates, "Candidate pool lexicon (default: built-in candidates)");
  auto *preset = se->add_option("--preset", select.preset, "dictionary-only|correlation-only|full")
                     ->check(CLI::IsMember({"dictionary-only", "correlation-only", "full"}));
  se->add_option("--alphas", select.alphas, "Cost weights a1,a2,a3")->excludes(preset);
  se->add_option("--metric", select.metric, "Metric correlated with perceptual scores: os|sm|ld|unk")
      ->check(CLI::IsMember({"os", "sm", "ld", "unk"}))
      ->capture_default_str();
  se->add_option("--out", select.out, "Write the result as JSON to this file");
  se->add_flag("--heuristic", select.heuristic, "Allow greedy search above --max-exhaustive (not optimal)");
  se->add_option("--max-exhaustive", select.max_exhaustive, "Largest pool searched exhaustively")
      ->capture_default_str();
  se->add_flag("--signed-correlation", select.signed_correlation, "Reward signed Pearson instead of |Pearson|");
  se->add_flag("--allow-partial", select.allow_partial, "os: skip words without features");
  se->callback([&] { run = [&] { return RunSelect(select, g); }; });

  CorrelateArgs corr;
  auto *co = app.add_subcommand("correlate", "Pearson correlation per word group");
  co->add_option("--corpus", corr.corpus, "Corpus directory")->required();
  co->add_option("--metric", corr.metric, "os|sm|ld|unk|all")
      ->check(CLI::IsMember(metric_names))
      ->capture_default_str();
  co->add_option("--out", corr.out, "Also write the table to this CSV file");
  co->add_flag("--allow-partial", corr.allow_partial, "os: skip words without features");
  co->callback([&] { run = [&] { return RunCorrelate(corr, g); }; });

  ValidateArgs validate;
  auto *va = app.add_subcommand("validate", "Load a corpus and print the validation report");
  va->add_option("--corpus", validate.corpus, "Corpus directory")->required();
  va->add_flag("--strict", validate.strict, "Fail on any warning or exclusion");
  va->callback([&] { run = [&] { return RunValidate(validate, g); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    return run();
  } catch (const Error &e) {
    std::cerr << "error: " << ErrorKindName(e.kind()) << ": " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception &e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return kExitData;
  }
}

}  // namespace
}  // namespace dysintel

int main(int argc, char **argv) { return dysintel::Main(argc, argv); }
