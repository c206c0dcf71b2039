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

// Corpus-level scoring: every metric for every speaker, the per-group
// correlation table, and the glue that turns scores into a selection problem.

#ifndef DYSINTEL_SCORING_H_
#define DYSINTEL_SCORING_H_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dysintel/corpus.h"
#include "dysintel/selection.h"
#include "dysintel/text_metrics.h"
#include "dysintel/visible_speech.h"

namespace dysintel {

struct SpeakerScore {
  std::string speaker;
  Cohort cohort = Cohort::kHealthy;
  std::optional<double> perceptual;
  std::map<Metric, double> value;                          // speaker level
  std::map<Metric, std::map<std::string, double>> words;   // per-word means
  std::map<Metric, std::vector<std::string>> excluded;     // allow_partial drops
};

struct ScoreTable {
  std::vector<Metric> metrics;        // column order
  std::vector<SpeakerScore> speakers; // sorted by id

  const SpeakerScore *Find(std::string_view speaker) const;
};

using UtteranceFilter = std::function<bool(const Utterance &)>;

struct ScoreOptions {
  std::vector<Metric> metrics{Metric::kOs, Metric::kSm, Metric::kLd, Metric::kUnk};
  // I_os: drop words lacking features or healthy references instead of
  // failing; drops are recorded in SpeakerScore::excluded.
  bool allow_partial = false;
  unsigned workers = 1;
  // Restricts the utterances considered (healthy references included).
  UtteranceFilter filter;
};

// Scores every speaker with at least one selected utterance. I_os scores a
// healthy speaker against the healthy pool without that speaker. Throws
// Error(kMissingData) when I_os is requested from a corpus without features.
// Output is independent of `workers`.
ScoreTable ScoreCorpus(const Corpus &corpus, const ScoreOptions &options);

// One correlation group of the summary table.
struct CorrelationGroup {
  std::string name;  // "CC", "UW1", "B2", "All", ...
  UtteranceFilter filter;
};

// CC, D, L, CW, UW1..UW3 (uncommon words by block), B1..B3 and All.
std::vector<CorrelationGroup> StandardGroups();

struct CorrelationCell {
  std::optional<double> pearson;
  std::size_t pairs = 0;  // dysarthric speakers with a score
  std::string reason;     // why pearson is absent
};

struct CorrelationTable {
  std::vector<Metric> metrics;
  std::vector<std::string> groups;
  // cells[metric][group]
  std::map<Metric, std::map<std::string, CorrelationCell>> cells;
  bool any_computable = false;
};

CorrelationTable CorrelateCorpus(const Corpus &corpus, const ScoreOptions &options,
                                 const std::vector<CorrelationGroup> &groups);

// Correlation of speaker-level scores with perceptual scores over the
// dysarthric speakers of `table`.
CorrelationCell CorrelateScores(const ScoreTable &table, Metric metric);

// Pool efforts from the lexicon, plus per-word scores of every dysarthric
// speaker when `scores` is given. Throws kUnknownWord for pool words outside
// the lexicon and kMissingData for a speaker missing a pool word.
SelectionProblem BuildSelectionProblem(const std::vector<std::string> &pool,
                                       const Lexicon &lexicon,
                                       const VsTable &vs_table,
                                       const ScoreTable *scores = nullptr,
                                       Metric metric = Metric::kSm);

}  // namespace dysintel

#endif  // DYSINTEL_SCORING_H_
