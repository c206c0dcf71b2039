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

// Transcript-based intelligibility scores. A raw CTC stream c* is first
// normalized to s1 = D(D(S(c*), <unk>), _) and compared against the spelled
// ground-truth word:
//
//   I_sm  = 100 * 2m / (l1 + lg)          m = gestalt matching characters
//   I_ld  = 100 * (1 - lev / (l1 + lg))   lev = Levenshtein distance
//   I_unk = 100 * (1 - min(u / lg, 1))    u = <unk> runs in S(c*)
//
// Per-speaker scores average over repetitions of a word first, then over the
// distinct words.

#ifndef DYSINTEL_TEXT_METRICS_H_
#define DYSINTEL_TEXT_METRICS_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include "dysintel/strops.h"

namespace dysintel {

enum class Metric { kOs, kSm, kLd, kUnk };

std::string_view MetricName(Metric m);  // "os", "sm", "ld", "unk"
Metric ParseMetric(std::string_view name);

struct NormalizedHypothesis {
  CharSeq s1;                  // no UNK, no SPACE
  std::size_t unk_count = 0;   // UNK runs, counted before deletion

  std::size_t length() const { return s1.size(); }
};

NormalizedHypothesis NormalizeHypothesis(std::span<const Token> c_star);

// Reference spelling of the prompted word. Always non-empty, letters and
// apostrophes only.
class GroundTruth {
 public:
  // Throws Error(kInvalidGroundTruth) for empty or non-letter words.
  explicit GroundTruth(std::string_view word);
  explicit GroundTruth(CharSeq tokens);

  const CharSeq &tokens() const { return tokens_; }
  std::size_t length() const { return tokens_.size(); }

 private:
  CharSeq tokens_;
};

// Ratcliff-Obershelp matching-character count. Ties for the longest common
// block go to the earliest start in `a`, then the earliest start in `b`.
std::size_t MatchingChars(std::span<const Token> a, std::span<const Token> b);

// Unit-cost Levenshtein distance.
std::size_t EditDistance(std::span<const Token> a, std::span<const Token> b);

double ScoreSm(const NormalizedHypothesis &h, const GroundTruth &g);
double ScoreLd(const NormalizedHypothesis &h, const GroundTruth &g);
double ScoreUnk(const NormalizedHypothesis &h, const GroundTruth &g);
// Os is not a text metric; passing it throws Error(kInvalidArgument).
double ScoreText(Metric m, const NormalizedHypothesis &h, const GroundTruth &g);

struct WordScore {
  std::string word;
  double value = 0.0;
};

// Mean over repetitions of each word, then unweighted mean over words.
// Order-independent. Throws Error(kNoData) for an empty input.
double AggregateSpeaker(std::span<const WordScore> scores);

}  // namespace dysintel

#endif  // DYSINTEL_TEXT_METRICS_H_
