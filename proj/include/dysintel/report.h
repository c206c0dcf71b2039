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

// Report serialization. All numbers are written with 6 decimals, missing
// values as "NA", rows sorted by speaker id (then word), so identical inputs
// give byte-identical files.
//
//   scores.csv        speaker_id,cohort,perceptual,<metric>...
//   word_scores.csv   speaker_id,word,<metric>...
//   scatter.csv       speaker_id,perceptual,<metric>...   (dysarthric only)
//   correlations.csv  metric,<group>...
//   normalization.csv dim,min,max
//   report.json       everything above

#ifndef DYSINTEL_REPORT_H_
#define DYSINTEL_REPORT_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dysintel/corpus.h"
#include "dysintel/scoring.h"
#include "dysintel/selection.h"

namespace dysintel {

inline constexpr std::string_view kNoCorrelations = "no correlations computable";

std::string ScoresCsv(const ScoreTable &table);
std::string WordScoresCsv(const ScoreTable &table);
std::string ScatterCsv(const ScoreTable &table);
std::string CorrelationsCsv(const CorrelationTable &table);
std::string NormalizationCsv(const NormalizationParams &params);
std::string ScoreReportJson(const ScoreTable &table,
                            const CorrelationTable *correlations,
                            const ValidationReport *validation);

// Reads scores.csv back. Throws Error(kParse).
ScoreTable ParseScoresCsv(std::string_view text, std::string_view origin);

struct ScoreReportFiles {
  const ScoreTable *scores = nullptr;
  const CorrelationTable *correlations = nullptr;
  const NormalizationParams *normalization = nullptr;
  const ValidationReport *validation = nullptr;
};

// Writes the files listed above into `dir` (created if needed). Throws
// Error(kIo) for an unwritable location.
void WriteScoreReport(const std::filesystem::path &dir, const ScoreReportFiles &files);

struct SelectionContext {
  Alphas alphas;
  std::optional<Metric> metric;  // absent for dictionary-only runs
  std::vector<std::string> pool;
  bool signed_correlation = false;
};

std::string SelectionJson(const SubsetResult &result, const SelectionContext &context);
std::string SelectionText(const SubsetResult &result, const SelectionContext &context);

}  // namespace dysintel

#endif  // DYSINTEL_REPORT_H_
