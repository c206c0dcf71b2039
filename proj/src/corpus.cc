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

#include "dysintel/corpus.h"

#include <algorithm>
#include <set>
#include <tuple>

#include <fmt/format.h>

#include "dysintel/errors.h"
#include "dysintel/text_metrics.h"
#include "text_util.h"

namespace dysintel {

std::string_view CohortName(Cohort c) {
  return c == Cohort::kHealthy ? "healthy" : "dysarthric";
}

std::string_view SeverityName(Severity s) {
  switch (s) {
    case Severity::kVeryLow: return "very-low";
    case Severity::kLow: return "low";
    case Severity::kMedium: return "medium";
    case Severity::kHigh: return "high";
  }
  return "?";
}

Severity ParseSeverity(std::string_view name) {
  for (Severity s : {Severity::kVeryLow, Severity::kLow, Severity::kMedium,
                     Severity::kHigh})
    if (SeverityName(s) == name) return s;
  throw Error(ErrorKind::kParse, fmt::format("unknown category '{}'", name));
}

Severity SeverityForScore(double score) {
  if (score <= 25.0) return Severity::kVeryLow;
  if (score <= 50.0) return Severity::kLow;
  if (score <= 75.0) return Severity::kMedium;
  return Severity::kHigh;
}

std::string_view BlockName(Block b) {
  switch (b) {
    case Block::kB1: return "B1";
    case Block::kB2: return "B2";
    case Block::kB3: return "B3";
  }
  return "?";
}

Block ParseBlock(std::string_view name) {
  if (name == "B1") return Block::kB1;
  if (name == "B2") return Block::kB2;
  if (name == "B3") return Block::kB3;
  throw Error(ErrorKind::kParse, fmt::format("unknown block '{}'", name));
}

std::string_view WordCategoryName(WordCategory c) {
  switch (c) {
    case WordCategory::kCC: return "CC";
    case WordCategory::kL: return "L";
    case WordCategory::kD: return "D";
    case WordCategory::kCW: return "CW";
    case WordCategory::kUW: return "UW";
  }
  return "?";
}

WordCategory ParseWordCategory(std::string_view name) {
  for (WordCategory c : {WordCategory::kCC, WordCategory::kL, WordCategory::kD,
                         WordCategory::kCW, WordCategory::kUW})
    if (WordCategoryName(c) == name) return c;
  throw Error(ErrorKind::kParse, fmt::format("unknown word category '{}'", name));
}

std::string Utterance::Id() const {
  return fmt::format("{}_{}_{}_{}", speaker, BlockName(block), word, rep);
}

CorpusPaths CorpusPaths::FromDirectory(const std::filesystem::path &dir) {
  CorpusPaths p;
  p.transcripts = dir / "transcripts.txt";
  p.lexicon = dir / "lexicon.dict";
  if (std::filesystem::exists(dir / "perceptual.csv"))
    p.perceptual = dir / "perceptual.csv";
  if (std::filesystem::exists(dir / "features.csv"))
    p.features = dir / "features.csv";
  return p;
}

std::size_t Corpus::feature_dim() const {
  return features_.empty() ? 0 : features_.front().size();
}

const Speaker &Corpus::speaker(std::string_view id) const {
  auto it = speakers_.find(id);
  if (it == speakers_.end())
    throw Error(ErrorKind::kUnknownSpeaker, fmt::format("unknown speaker '{}'", id));
  return it->second;
}

std::vector<std::string> Corpus::dysarthric_speakers() const {
  std::vector<std::string> out;
  for (const auto &[id, s] : speakers_)
    if (s.cohort == Cohort::kDysarthric) out.push_back(id);
  return out;
}

std::vector<std::string> Corpus::words() const {
  std::set<std::string> words;
  for (const Utterance &u : utterances_) words.insert(u.word);
  return {words.begin(), words.end()};
}

namespace {

[[noreturn]] void Fail(ErrorKind kind, std::string_view origin, int line,
                       const std::string &message) {
  throw Error(kind, fmt::format("{}:{}: {}", origin, line, message));
}

auto Key(const Utterance &u) {
  return std::tie(u.speaker, u.word, u.block, u.rep);
}

std::vector<Utterance> ParseTranscripts(std::string_view text,
                                        std::string_view origin,
                                        const Lexicon &lexicon) {
  std::vector<Utterance> out;
  for (const internal::Line &line : internal::ContentLines(text)) {
    auto f = internal::SplitWhitespace(line.text);
    if (f.size() < 5)
      internal::ParseFailure(origin, line.number,
                             "expected: <speaker> <word> <rep> <block> <category> <hyp>...");
    Utterance u;
    u.speaker = std::string(f[0]);
    u.word = internal::ToLower(f[1]);
    try {
      u.rep = static_cast<int>(internal::ParseInt(f[2], origin, line.number));
      u.block = ParseBlock(f[3]);
      u.category = ParseWordCategory(f[4]);
      for (std::size_t i = 5; i < f.size(); ++i)
        u.hypothesis.push_back(ParseToken(f[i]));
      GroundTruth check(u.word);
    } catch (const Error &e) {
      if (e.kind() == ErrorKind::kParse && std::string_view(e.what()).starts_with(origin))
        throw;
      Fail(e.kind(), origin, line.number, e.what());
    }
    if (u.rep < 1 || u.rep > 3)
      Fail(ErrorKind::kParse, origin, line.number,
           fmt::format("repetition {} outside 1..3", u.rep));
    if (u.category == WordCategory::kUW && u.rep != 1)
      Fail(ErrorKind::kParse, origin, line.number,
           "uncommon-word utterances have a single repetition");
    if (!lexicon.Contains(u.word))
      Fail(ErrorKind::kUnknownWord, origin, line.number,
           fmt::format("word '{}' is not in the lexicon", u.word));
    out.push_back(std::move(u));
  }
  std::sort(out.begin(), out.end(),
            [](const Utterance &a, const Utterance &b) { return Key(a) < Key(b); });
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (Key(out[i - 1]) == Key(out[i]))
      throw Error(ErrorKind::kDuplicateKey,
                  fmt::format("{}: duplicate utterance {}", origin, out[i].Id()));
  }
  return out;
}

void ParsePerceptual(std::string_view text, std::string_view origin,
                     std::map<std::string, Speaker, std::less<>> &speakers) {
  auto lines = internal::ContentLines(text);
  if (lines.empty() || lines.front().text != "speaker_id,score,category")
    internal::ParseFailure(origin, lines.empty() ? 1 : lines.front().number,
                           "expected header 'speaker_id,score,category'");
  std::set<std::string, std::less<>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const internal::Line &line = lines[i];
    auto f = internal::SplitChar(line.text, ',');
    if (f.size() != 3)
      internal::ParseFailure(origin, line.number, "expected 3 columns");
    std::string id(internal::Trim(f[0]));
    double score = internal::ParseDouble(f[1], origin, line.number);
    if (score < 0.0 || score > 100.0)
      internal::ParseFailure(origin, line.number,
                             fmt::format("perceptual score {} outside [0,100]", score));
    auto it = speakers.find(id);
    if (it == speakers.end())
      Fail(ErrorKind::kUnknownSpeaker, origin, line.number,
           fmt::format("speaker '{}' has no utterances", id));
    if (!seen.insert(id).second)
      Fail(ErrorKind::kDuplicateKey, origin, line.number,
           fmt::format("speaker '{}' listed twice", id));
    Severity expected = SeverityForScore(score);
    std::string_view cat = internal::Trim(f[2]);
    if (!cat.empty()) {
      Severity given;
      try {
        given = ParseSeverity(cat);
      } catch (const Error &e) {
        internal::ParseFailure(origin, line.number, e.what());
      }
      if (given != expected)
        Fail(ErrorKind::kValidation, origin, line.number,
             fmt::format("category '{}' does not match score {} (expected '{}')",
                         cat, score, SeverityName(expected)));
    }
    it->second.cohort = Cohort::kDysarthric;
    it->second.perceptual = score;
    it->second.severity = expected;
  }
}

// Returns the matched raw vectors; sets Utterance::feature.
std::vector<FeatureVector> ParseFeatures(std::string_view text,
                                         std::string_view origin,
                                         std::vector<Utterance> &utterances,
                                         ValidationReport &report) {
  auto lines = internal::ContentLines(text);
  if (lines.empty()) internal::ParseFailure(origin, 1, "missing header");
  auto header = internal::SplitChar(lines.front().text, ',');
  if (header.size() < 2 || header[0] != "utterance_id")
    internal::ParseFailure(origin, lines.front().number,
                           "expected header 'utterance_id,f0,...'");
  const std::size_t dim = header.size() - 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (header[i + 1] != fmt::format("f{}", i))
      internal::ParseFailure(origin, lines.front().number,
                             fmt::format("header column {} should be 'f{}'", i + 1, i));
  }
  if (dim != kDefaultFeatureDim)
    report.warnings.push_back(fmt::format(
        "{}: feature dimension is {}, expected {}", origin, dim, kDefaultFeatureDim));

  std::map<std::string, std::size_t> by_id;
  for (std::size_t i = 0; i < utterances.size(); ++i)
    by_id.emplace(utterances[i].Id(), i);

  // (utterance index, vector), sorted afterwards so row order is irrelevant.
  std::vector<std::pair<std::size_t, FeatureVector>> rows;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const internal::Line &line = lines[li];
    auto f = internal::SplitChar(line.text, ',');
    if (f.size() != dim + 1)
      Fail(ErrorKind::kDimensionMismatch, origin, line.number,
           fmt::format("row has {} feature columns, header has {}", f.size() - 1, dim));
    std::string id(internal::Trim(f[0]));
    FeatureVector v(dim);
    for (std::size_t i = 0; i < dim; ++i)
      v[i] = internal::ParseDouble(f[i + 1], origin, line.number);
    auto it = by_id.find(id);
    if (it == by_id.end()) {
      report.excluded.push_back(fmt::format(
          "{}:{}: feature row '{}' matches no utterance", origin, line.number, id));
      continue;
    }
    if (utterances[it->second].feature)
      Fail(ErrorKind::kDuplicateKey, origin, line.number,
           fmt::format("second feature row for '{}'", id));
    utterances[it->second].feature = 0;  // placeholder until sorted
    rows.emplace_back(it->second, std::move(v));
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto &a, const auto &b) { return a.first < b.first; });
  std::vector<FeatureVector> out;
  out.reserve(rows.size());
  for (auto &[index, v] : rows) {
    utterances[index].feature = out.size();
    out.push_back(std::move(v));
  }
  std::size_t missing = 0;
  for (const Utterance &u : utterances)
    if (!u.feature) ++missing;
  if (missing)
    report.warnings.push_back(
        fmt::format("{}: {} utterances have no feature vector", origin, missing));
  return out;
}

}  // namespace

Corpus ParseCorpus(const CorpusText &text) {
  Corpus c;
  c.lexicon_ = Lexicon::Parse(text.lexicon, text.lexicon_origin);
  c.utterances_ =
      ParseTranscripts(text.transcripts, text.transcripts_origin, c.lexicon_);
  for (const Utterance &u : c.utterances_) {
    if (!c.speakers_.contains(u.speaker))
      c.speakers_.emplace(u.speaker, Speaker{u.speaker, Cohort::kHealthy, std::nullopt, std::nullopt});
  }
  if (text.perceptual)
    ParsePerceptual(*text.perceptual, text.perceptual_origin, c.speakers_);
  if (text.features) {
    c.features_ = ParseFeatures(*text.features, text.features_origin,
                                c.utterances_, c.report_);
    if (!c.features_.empty()) {
      c.normalization_ = FitNormalization(c.features_);
      for (const FeatureVector &v : c.features_)
        c.normalized_.push_back(Normalize(v, *c.normalization_));
    }
  }
  return c;
}

Corpus LoadCorpus(const CorpusPaths &paths) {
  CorpusText text;
  text.transcripts = internal::ReadFile(paths.transcripts);
  text.transcripts_origin = paths.transcripts.string();
  text.lexicon = internal::ReadFile(paths.lexicon);
  text.lexicon_origin = paths.lexicon.string();
  if (paths.perceptual) {
    text.perceptual = internal::ReadFile(*paths.perceptual);
    text.perceptual_origin = paths.perceptual->string();
  }
  if (paths.features) {
    text.features = internal::ReadFile(*paths.features);
    text.features_origin = paths.features->string();
  }
  return ParseCorpus(text);
}

}  // namespace dysintel
