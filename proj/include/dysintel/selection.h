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

// Assessment word-set selection. For a candidate pool P and a subset W,
//
//   cost(W) = a1 * |W|/|P|  -  a2 * |Pc(W)|  -  a3 * E(W)/E(P)
//
// where Pc(W) is the Pearson correlation, over dysarthric speakers, between
// each speaker's mean metric score on W and their perceptual score, and
// E(.) sums articulatory word effort. The optimum is found by exhaustive
// enumeration of all 2^n - 1 nonempty subsets; ties go to fewer words, then
// to the lexicographically smaller sorted word list.

#ifndef DYSINTEL_SELECTION_H_
#define DYSINTEL_SELECTION_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dysintel {

struct Alphas {
  double a1 = 1.0;
  double a2 = 1.0;
  double a3 = 1.0;

  // Throws Error(kInvalidArgument) for a negative or all-zero triple.
  void Validate() const;
  // "1,0,1"
  static Alphas Parse(std::string_view text);
};

enum class Scenario { kDictionaryOnly, kCorrelationOnly, kFull };

Alphas ScenarioAlphas(Scenario s);
// "dictionary-only" | "correlation-only" | "full"
Scenario ParseScenario(std::string_view name);

// Sample Pearson coefficient. Throws Error(kUndefinedCorrelation) for fewer
// than 3 points, mismatched lengths or a constant series.
double Pearson(std::span<const double> x, std::span<const double> y);

// Unweighted mean of the speaker's per-word scores over `subset`. Throws
// Error(kMissingData) for a word without a score and kNoData when empty.
double SubsetSpeakerScore(std::span<const std::string> subset,
                          const std::map<std::string, double> &scores_by_word);

struct SpeakerScores {
  std::string speaker;
  double perceptual = 0.0;
  std::map<std::string, double> by_word;  // per-word metric score
};

// Immutable search input: the candidate pool with word efforts and,
// optionally, dysarthric speaker scores for the correlation term.
class SelectionProblem {
 public:
  // Throws Error(kNoData) for an empty pool and Error(kMissingData) when a
  // speaker lacks a score for some pool word.
  explicit SelectionProblem(const std::map<std::string, int> &effort_by_word,
                            std::vector<SpeakerScores> speakers = {});

  std::size_t size() const { return pool_.size(); }
  const std::vector<std::string> &pool() const { return pool_; }
  const std::vector<int> &efforts() const { return efforts_; }
  long total_effort() const { return total_effort_; }
  std::size_t num_speakers() const { return perceptual_.size(); }
  bool has_speakers() const { return !perceptual_.empty(); }

  // score(speaker, word index)
  double score(std::size_t speaker, std::size_t word) const {
    return scores_[speaker * pool_.size() + word];
  }
  std::span<const double> perceptual() const { return perceptual_; }

 private:
  std::vector<std::string> pool_;  // sorted
  std::vector<int> efforts_;
  long total_effort_ = 0;
  std::vector<double> scores_;     // speakers x pool, row-major
  std::vector<double> perceptual_;
};

struct SubsetResult {
  std::vector<std::string> words;  // sorted
  double cost = 0.0;
  double size_term = 0.0;    // |W| / |P|
  double corr_term = 0.0;    // |Pc| (or signed Pc), 0 when a2 == 0
  double effort_term = 0.0;  // E(W) / E(P)
  std::optional<double> pearson;  // absent when a2 == 0
  long subset_effort = 0;
  long pool_effort = 0;
  std::uint64_t subsets_evaluated = 0;
  std::uint64_t subsets_skipped = 0;  // correlation undefined
  bool exhaustive = true;
};

struct CostOptions {
  // Reward Pc itself instead of |Pc|.
  bool signed_correlation = false;
};

// Cost of one subset with its full decomposition. Throws
// Error(kUnknownWord) for words outside the pool, Error(kMissingData) when
// a2 > 0 and the problem has no speaker data, and
// Error(kUndefinedCorrelation) when Pc is undefined for the subset.
SubsetResult SubsetCost(const SelectionProblem &problem,
                        std::span<const std::string> subset, const Alphas &alphas,
                        const CostOptions &cost_options = {});

struct OptimizeOptions {
  std::size_t max_exhaustive_n = 24;
  // Greedy forward selection for pools above max_exhaustive_n. Not optimal.
  bool allow_heuristic = false;
  unsigned workers = 1;
  CostOptions cost;
};

// Argmin of the cost over nonempty subsets. Subsets whose correlation is
// undefined are skipped and counted. The result does not depend on
// `workers`. Throws Error(kRefused) for an oversized pool without
// allow_heuristic, and Error(kUndefinedCorrelation) if every subset was
// skipped.
SubsetResult Optimize(const SelectionProblem &problem, const Alphas &alphas,
                      const OptimizeOptions &options = {});

}  // namespace dysintel

#endif  // DYSINTEL_SELECTION_H_
