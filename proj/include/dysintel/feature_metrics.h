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

// Feature-distance intelligibility (I_os). Each utterance is a fixed-length
// acoustic descriptor vector, min-max normalized per dimension. A dysarthric
// speaker's score for a word is the mean scaled Euclidean distance to every
// healthy rendition of that word; larger means less intelligible.

#ifndef DYSINTEL_FEATURE_METRICS_H_
#define DYSINTEL_FEATURE_METRICS_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace dysintel {

inline constexpr std::size_t kDefaultFeatureDim = 384;

using FeatureVector = std::vector<double>;

struct NormalizationParams {
  std::vector<double> min;
  std::vector<double> max;

  std::size_t dim() const { return min.size(); }
  bool IsConstant(std::size_t i) const { return max[i] == min[i]; }
};

// Per-dimension min/max. Throws kNoData on an empty corpus and
// kDimensionMismatch on ragged input.
NormalizationParams FitNormalization(std::span<const FeatureVector> corpus);

// (x - min) / (max - min) clamped to [0, 1]; constant dimensions map to 0.
FeatureVector Normalize(std::span<const double> v, const NormalizationParams &p);

// (1/|F|) * ||a - b||_2.
double FeatureDistance(std::span<const double> a, std::span<const double> b);

// Mean FeatureDistance over the cross product of the speaker's repetitions
// and the healthy references for one word. Both sides must be normalized.
// Throws kMissingData if either side is empty.
double IosWord(std::span<const FeatureVector> speaker_reps,
               std::span<const FeatureVector> healthy_refs);

// Normalized vectors for one cohort or speaker, keyed by word.
using FeaturesByWord = std::map<std::string, std::vector<FeatureVector>>;

struct IosResult {
  double value = 0.0;
  std::vector<std::string> scored;    // words that contributed
  std::vector<std::string> excluded;  // words dropped under allow_partial
};

// Mean of IosWord over `words`. A word with no speaker repetition or no
// healthy reference is an error (kMissingData) unless allow_partial is set,
// in which case it is listed in `excluded`. At least one word must remain.
IosResult IosSpeaker(const FeaturesByWord &speaker,
                     const FeaturesByWord &healthy_pool,
                     std::span<const std::string> words,
                     bool allow_partial = false);

}  // namespace dysintel

#endif  // DYSINTEL_FEATURE_METRICS_H_
