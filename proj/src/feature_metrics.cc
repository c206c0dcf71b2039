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

#include "dysintel/feature_metrics.h"

#include <algorithm>
#include <cmath>

#include "dysintel/errors.h"

namespace dysintel {

namespace {

void CheckDim(std::size_t got, std::size_t want) {
  if (got != want) {
    throw Error(ErrorKind::kDimensionMismatch,
                "feature dimension " + std::to_string(got) + ", expected " +
                    std::to_string(want));
  }
}

}  // namespace

NormalizationParams FitNormalization(std::span<const FeatureVector> corpus) {
  if (corpus.empty())
    throw Error(ErrorKind::kNoData, "cannot fit normalization on no vectors");
  NormalizationParams p;
  p.min = corpus.front();
  p.max = corpus.front();
  for (const FeatureVector &v : corpus) {
    CheckDim(v.size(), p.dim());
    for (std::size_t i = 0; i < v.size(); ++i) {
      p.min[i] = std::min(p.min[i], v[i]);
      p.max[i] = std::max(p.max[i], v[i]);
    }
  }
  return p;
}

FeatureVector Normalize(std::span<const double> v, const NormalizationParams &p) {
  CheckDim(v.size(), p.dim());
  FeatureVector out(v.size(), 0.0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (p.IsConstant(i)) continue;
    out[i] = std::clamp((v[i] - p.min[i]) / (p.max[i] - p.min[i]), 0.0, 1.0);
  }
  return out;
}

double FeatureDistance(std::span<const double> a, std::span<const double> b) {
  CheckDim(b.size(), a.size());
  if (a.empty()) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum) / static_cast<double>(a.size());
}

double IosWord(std::span<const FeatureVector> speaker_reps,
               std::span<const FeatureVector> healthy_refs) {
  if (speaker_reps.empty() || healthy_refs.empty())
    throw Error(ErrorKind::kMissingData, "no feature pairs for word");
  double sum = 0.0;
  for (const FeatureVector &s : speaker_reps)
    for (const FeatureVector &h : healthy_refs) sum += FeatureDistance(s, h);
  return sum / static_cast<double>(speaker_reps.size() * healthy_refs.size());
}

IosResult IosSpeaker(const FeaturesByWord &speaker,
                     const FeaturesByWord &healthy_pool,
                     std::span<const std::string> words, bool allow_partial) {
  IosResult result;
  double sum = 0.0;
  for (const std::string &w : words) {
    auto s = speaker.find(w);
    auto h = healthy_pool.find(w);
    const bool have_s = s != speaker.end() && !s->second.empty();
    const bool have_h = h != healthy_pool.end() && !h->second.empty();
    if (!have_s || !have_h) {
      if (!allow_partial) {
        throw Error(ErrorKind::kMissingData,
                    "word '" + w + "' has no " +
                        (have_s ? "healthy reference" : "speaker features"));
      }
      result.excluded.push_back(w);
      continue;
    }
    sum += IosWord(s->second, h->second);
    result.scored.push_back(w);
  }
  if (result.scored.empty())
    throw Error(ErrorKind::kNoData, "no word could be scored with I_os");
  result.value = sum / static_cast<double>(result.scored.size());
  return result;
}

}  // namespace dysintel
