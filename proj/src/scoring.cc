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

#include "dysintel/scoring.h"

#include <algorithm>
#include <set>

#include <fmt/format.h>

#include "dysintel/errors.h"
#include "dysintel/feature_metrics.h"
#include "dysintel/phonetics.h"
#include "parallel.h"

namespace dysintel {

const SpeakerScore *ScoreTable::Find(std::string_view speaker) const {
  auto it = std::lower_bound(
      speakers.begin(), speakers.end(), speaker,
      [](const SpeakerScore &s, std::string_view id) { return s.speaker < id; });
  return it != speakers.end() && it->speaker == speaker ? &*it : nullptr;
}

namespace {

bool IsTextMetric(Metric m) { return m != Metric::kOs; }

double SortedMean(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

}  // namespace

ScoreTable ScoreCorpus(const Corpus &corpus, const ScoreOptions &options) {
  ScoreTable table;
  table.metrics = options.metrics;
  const bool want_os =
      std::find(options.metrics.begin(), options.metrics.end(), Metric::kOs) !=
      options.metrics.end();
  if (want_os && !corpus.has_features())
    throw Error(ErrorKind::kMissingData,
                "metric os needs feature vectors; the corpus has none");

  // Selected utterances grouped by speaker (utterances are sorted by speaker).
  std::map<std::string, std::vector<const Utterance *>> by_speaker;
  for (const Utterance &u : corpus.utterances())
    if (!options.filter || options.filter(u)) by_speaker[u.speaker].push_back(&u);

  // Normalized healthy features: speaker -> word -> vectors.
  std::map<std::string, FeaturesByWord> healthy;
  if (want_os) {
    for (const auto &[speaker, utts] : by_speaker) {
      if (corpus.speaker(speaker).cohort != Cohort::kHealthy) continue;
      for (const Utterance *u : utts)
        if (u->feature)
          healthy[speaker][u->word].push_back(corpus.normalized_features()[*u->feature]);
    }
  }

  std::vector<std::string> ids;
  for (const auto &entry : by_speaker) ids.push_back(entry.first);
  table.speakers.resize(ids.size());

  internal::ParallelFor(ids.size(), options.workers, [&](std::size_t i) {
    const std::string &id = ids[i];
    const Speaker &spk = corpus.speaker(id);
    const std::vector<const Utterance *> &utts = by_speaker.at(id);
    SpeakerScore out;
    out.speaker = id;
    out.cohort = spk.cohort;
    out.perceptual = spk.perceptual;

    for (Metric m : options.metrics) {
      if (!IsTextMetric(m)) continue;
      std::vector<WordScore> scores;
      std::map<std::string, std::vector<double>> per_word;
      for (const Utterance *u : utts) {
        double v = ScoreText(m, NormalizeHypothesis(u->hypothesis), GroundTruth(u->word));
        scores.push_back({u->word, v});
        per_word[u->word].push_back(v);
      }
      out.value[m] = AggregateSpeaker(scores);
      for (auto &[w, values] : per_word) out.words[m][w] = SortedMean(values);
    }

    if (want_os) {
      FeaturesByWord own, pool;
      std::set<std::string> words;
      for (const Utterance *u : utts) {
        words.insert(u->word);
        if (u->feature)
          own[u->word].push_back(corpus.normalized_features()[*u->feature]);
      }
      for (const auto &[other, by_word] : healthy) {
        if (other == id) continue;
        for (const auto &[w, vectors] : by_word)
          pool[w].insert(pool[w].end(), vectors.begin(), vectors.end());
      }
      std::vector<std::string> word_list(words.begin(), words.end());
      IosResult r;
      try {
        r = IosSpeaker(own, pool, word_list, options.allow_partial);
      } catch (const Error &e) {
        throw Error(e.kind(), fmt::format("speaker '{}': {}", id, e.what()));
      }
      out.value[Metric::kOs] = r.value;
      for (const std::string &w : r.scored)
        out.words[Metric::kOs][w] = IosWord(own.at(w), pool.at(w));
      if (!r.excluded.empty()) out.excluded[Metric::kOs] = r.excluded;
    }
    table.speakers[i] = std::move(out);
  });
  return table;
}

std::vector<CorrelationGroup> StandardGroups() {
  auto category = [](WordCategory c) {
    return [c](const Utterance &u) { return u.category == c; };
  };
  auto uw_block = [](Block b) {
    return [b](const Utterance &u) {
      return u.category == WordCategory::kUW && u.block == b;
    };
  };
  auto block = [](Block b) { return [b](const Utterance &u) { return u.block == b; }; };
  return {
      {"CC", category(WordCategory::kCC)},
      {"D", category(WordCategory::kD)},
      {"L", category(WordCategory::kL)},
      {"CW", category(WordCategory::kCW)},
      {"UW1", uw_block(Block::kB1)},
      {"UW2", uw_block(Block::kB2)},
      {"UW3", uw_block(Block::kB3)},
      {"B1", block(Block::kB1)},
      {"B2", block(Block::kB2)},
      {"B3", block(Block::kB3)},
      {"All", [](const Utterance &) { return true; }},
  };
}

CorrelationCell CorrelateScores(const ScoreTable &table, Metric metric) {
  CorrelationCell cell;
  std::vector<double> predicted, perceptual;
  for (const SpeakerScore &s : table.speakers) {
    if (s.cohort != Cohort::kDysarthric || !s.perceptual) continue;
    auto it = s.value.find(metric);
    if (it == s.value.end()) continue;
    predicted.push_back(it->second);
    perceptual.push_back(*s.perceptual);
  }
  cell.pairs = predicted.size();
  if (cell.pairs < 3) {
    cell.reason = fmt::format("{} dysarthric speakers with scores, need 3", cell.pairs);
    return cell;
  }
  try {
    cell.pearson = Pearson(predicted, perceptual);
  } catch (const Error &e) {
    cell.reason = e.what();
  }
  return cell;
}

CorrelationTable CorrelateCorpus(const Corpus &corpus, const ScoreOptions &options,
                                 const std::vector<CorrelationGroup> &groups) {
  CorrelationTable table;
  table.metrics = options.metrics;
  for (const CorrelationGroup &g : groups) {
    table.groups.push_back(g.name);
    ScoreOptions group_options = options;
    group_options.filter = [&](const Utterance &u) {
      return g.filter(u) && (!options.filter || options.filter(u));
    };
    ScoreTable scores = ScoreCorpus(corpus, group_options);
    for (Metric m : options.metrics) {
      CorrelationCell cell = CorrelateScores(scores, m);
      if (scores.speakers.empty()) cell.reason = "no utterances in group";
      table.any_computable = table.any_computable || cell.pearson.has_value();
      table.cells[m][g.name] = std::move(cell);
    }
  }
  return table;
}

SelectionProblem BuildSelectionProblem(const std::vector<std::string> &pool,
                                       const Lexicon &lexicon,
                                       const VsTable &vs_table,
                                       const ScoreTable *scores, Metric metric) {
  std::map<std::string, int> efforts;
  for (const std::string &w : pool)
    efforts[w] = WordEffortOf(lexicon.Find(w), vs_table);
  std::vector<SpeakerScores> speakers;
  if (scores) {
    for (const SpeakerScore &s : scores->speakers) {
      if (s.cohort != Cohort::kDysarthric || !s.perceptual) continue;
      SpeakerScores ss;
      ss.speaker = s.speaker;
      ss.perceptual = *s.perceptual;
      if (auto it = s.words.find(metric); it != s.words.end()) {
        for (const std::string &w : pool)
          if (auto jt = it->second.find(w); jt != it->second.end())
            ss.by_word[w] = jt->second;
      }
      speakers.push_back(std::move(ss));
    }
  }
  return SelectionProblem(efforts, std::move(speakers));
}

}  // namespace dysintel
