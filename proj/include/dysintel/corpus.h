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

// Corpus data model and loader.
//
// A corpus directory holds:
//
//   transcripts.txt  one utterance per line:
//                      <speaker> <word> <rep> <block> <category> <hyp token>...
//                    e.g. "M05 naturalization 1 B2 UW n a a _ t <unk> e"
//   lexicon.dict     "<word> <ARPABET phone>..."
//   perceptual.csv   header "speaker_id,score,category"; listed speakers are
//                    the dysarthric cohort, everyone else is healthy
//   features.csv     optional; header "utterance_id,f0,...,f383", utterance
//                    id "<speaker>_<word>_<rep>"
//
// Loading is order-insensitive: the corpus is stored sorted by
// (speaker, word, rep) whatever the input row order.

#ifndef DYSINTEL_CORPUS_H_
#define DYSINTEL_CORPUS_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dysintel/feature_metrics.h"
#include "dysintel/phonetics.h"
#include "dysintel/strops.h"

namespace dysintel {

enum class Cohort { kHealthy, kDysarthric };
enum class Severity { kVeryLow, kLow, kMedium, kHigh };
enum class Block { kB1, kB2, kB3 };
enum class WordCategory { kCC, kL, kD, kCW, kUW };

std::string_view CohortName(Cohort c);
std::string_view SeverityName(Severity s);  // "very-low", "low", ...
Severity ParseSeverity(std::string_view name);
// Perceptual bins: [0,25] very-low, (25,50] low, (50,75] medium, (75,100] high.
Severity SeverityForScore(double score);
std::string_view BlockName(Block b);            // "B1"
Block ParseBlock(std::string_view name);
std::string_view WordCategoryName(WordCategory c);  // "CC", "L", ...
WordCategory ParseWordCategory(std::string_view name);

struct Speaker {
  std::string id;
  Cohort cohort = Cohort::kHealthy;
  std::optional<double> perceptual;  // dysarthric only
  std::optional<Severity> severity;  // dysarthric only
};

struct Utterance {
  std::string speaker;
  std::string word;
  int rep = 1;
  Block block = Block::kB1;
  WordCategory category = WordCategory::kUW;
  CharSeq hypothesis;
  std::optional<std::size_t> feature;  // index into Corpus::features()

  std::string Id() const;  // "<speaker>_<block>_<word>_<rep>"
};

struct ValidationReport {
  std::vector<std::string> warnings;
  std::vector<std::string> excluded;  // data present in the input but unused

  bool clean() const { return warnings.empty() && excluded.empty(); }
};

struct CorpusPaths {
  std::filesystem::path transcripts;
  std::filesystem::path lexicon;
  std::optional<std::filesystem::path> perceptual;
  std::optional<std::filesystem::path> features;

  // Standard file names inside `dir`; perceptual.csv and features.csv are
  // optional and picked up only when present.
  static CorpusPaths FromDirectory(const std::filesystem::path &dir);
};

struct CorpusText;

class Corpus {
 public:
  const std::map<std::string, Speaker, std::less<>> &speakers() const {
    return speakers_;
  }
  const std::vector<Utterance> &utterances() const { return utterances_; }
  const Lexicon &lexicon() const { return lexicon_; }
  // Raw vectors as read; see normalized_features().
  const std::vector<FeatureVector> &features() const { return features_; }
  const std::vector<FeatureVector> &normalized_features() const {
    return normalized_;
  }
  const std::optional<NormalizationParams> &normalization() const {
    return normalization_;
  }
  bool has_features() const { return !features_.empty(); }
  std::size_t feature_dim() const;
  const ValidationReport &report() const { return report_; }

  const Speaker &speaker(std::string_view id) const;
  std::vector<std::string> dysarthric_speakers() const;
  std::vector<std::string> words() const;  // distinct, sorted

 private:
  friend Corpus ParseCorpus(const CorpusText &text);

  std::map<std::string, Speaker, std::less<>> speakers_;
  std::vector<Utterance> utterances_;
  Lexicon lexicon_;
  std::vector<FeatureVector> features_;
  std::vector<FeatureVector> normalized_;
  std::optional<NormalizationParams> normalization_;
  ValidationReport report_;
};

// Parses and cross-references every file. Throws Error(kParse) with
// "<file>:<line>:" context, kUnknownWord / kUnknownSpeaker for dangling
// references, kDuplicateKey for repeated (speaker, word, rep) keys and
// kDimensionMismatch for ragged feature rows. Feature rows naming no known
// utterance are excluded and listed in the validation report.
Corpus LoadCorpus(const CorpusPaths &paths);

// Same, from in-memory file contents (used by tests and the loader).
struct CorpusText {
  std::string transcripts;
  std::string lexicon;
  std::optional<std::string> perceptual;
  std::optional<std::string> features;
  // Names used in error messages.
  std::string transcripts_origin = "transcripts.txt";
  std::string lexicon_origin = "lexicon.dict";
  std::string perceptual_origin = "perceptual.csv";
  std::string features_origin = "features.csv";
};
Corpus ParseCorpus(const CorpusText &text);

}  // namespace dysintel

#endif  // DYSINTEL_CORPUS_H_
