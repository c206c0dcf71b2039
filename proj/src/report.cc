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

#include "dysintel/report.h"

#include <set>

#include <fmt/format.h>
#include <json.hpp>

#include "dysintel/errors.h"
#include "text_util.h"

namespace dysintel {

using Json = nlohmann::ordered_json;

namespace {

std::string Num(std::optional<double> v) {
  return v ? internal::FormatFixed(*v) : std::string("NA");
}

std::optional<double> Lookup(const std::map<Metric, double> &m, Metric k) {
  auto it = m.find(k);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

// Same rounding as the CSV files.
Json JsonNum(std::optional<double> v) {
  if (!v) return nullptr;
  return std::stod(internal::FormatFixed(*v));
}

std::string MetricHeader(const std::vector<Metric> &metrics) {
  std::string out;
  for (Metric m : metrics) out += fmt::format(",{}", MetricName(m));
  return out;
}

}  // namespace

std::string ScoresCsv(const ScoreTable &table) {
  std::string out = "speaker_id,cohort,perceptual" + MetricHeader(table.metrics) + "\n";
  for (const SpeakerScore &s : table.speakers) {
    out += fmt::format("{},{},{}", s.speaker, CohortName(s.cohort), Num(s.perceptual));
    for (Metric m : table.metrics) out += "," + Num(Lookup(s.value, m));
    out += "\n";
  }
  return out;
}

std::string WordScoresCsv(const ScoreTable &table) {
  std::string out = "speaker_id,word" + MetricHeader(table.metrics) + "\n";
  for (const SpeakerScore &s : table.speakers) {
    std::set<std::string> words;
    for (const auto &[m, by_word] : s.words)
      for (const auto &entry : by_word) words.insert(entry.first);
    for (const std::string &w : words) {
      out += fmt::format("{},{}", s.speaker, w);
      for (Metric m : table.metrics) {
        std::optional<double> v;
        if (auto it = s.words.find(m); it != s.words.end())
          if (auto jt = it->second.find(w); jt != it->second.end()) v = jt->second;
        out += "," + Num(v);
      }
      out += "\n";
    }
  }
  return out;
}

std::string ScatterCsv(const ScoreTable &table) {
  std::string out = "speaker_id,perceptual" + MetricHeader(table.metrics) + "\n";
  for (const SpeakerScore &s : table.speakers) {
    if (s.cohort != Cohort::kDysarthric) continue;
    out += fmt::format("{},{}", s.speaker, Num(s.perceptual));
    for (Metric m : table.metrics) out += "," + Num(Lookup(s.value, m));
    out += "\n";
  }
  return out;
}

std::string CorrelationsCsv(const CorrelationTable &table) {
  if (!table.any_computable)
    return fmt::format("status\n{}\n", kNoCorrelations);
  std::string out = "metric";
  for (const std::string &g : table.groups) out += "," + g;
  out += "\n";
  for (Metric m : table.metrics) {
    out += MetricName(m);
    for (const std::string &g : table.groups)
      out += "," + Num(table.cells.at(m).at(g).pearson);
    out += "\n";
  }
  return out;
}

std::string NormalizationCsv(const NormalizationParams &params) {
  std::string out = "dim,min,max\n";
  for (std::size_t i = 0; i < params.dim(); ++i)
    out += fmt::format("{},{},{}\n", i, internal::FormatFixed(params.min[i]),
                       internal::FormatFixed(params.max[i]));
  return out;
}

std::string ScoreReportJson(const ScoreTable &table,
                            const CorrelationTable *correlations,
                            const ValidationReport *validation) {
  Json root;
  Json metrics = Json::array();
  for (Metric m : table.metrics) metrics.push_back(MetricName(m));
  root["metrics"] = metrics;

  Json speakers = Json::array();
  for (const SpeakerScore &s : table.speakers) {
    Json js;
    js["speaker_id"] = s.speaker;
    js["cohort"] = CohortName(s.cohort);
    js["perceptual"] = JsonNum(s.perceptual);
    Json scores, words, excluded;
    for (Metric m : table.metrics) {
      scores[std::string(MetricName(m))] = JsonNum(Lookup(s.value, m));
      Json w = Json::object();
      if (auto it = s.words.find(m); it != s.words.end())
        for (const auto &[word, v] : it->second) w[word] = JsonNum(v);
      words[std::string(MetricName(m))] = w;
      if (auto it = s.excluded.find(m); it != s.excluded.end())
        excluded[std::string(MetricName(m))] = it->second;
    }
    js["scores"] = scores;
    js["word_scores"] = words;
    if (!excluded.is_null()) js["excluded_words"] = excluded;
    speakers.push_back(js);
  }
  root["speakers"] = speakers;

  Json scatter = Json::array();
  for (const SpeakerScore &s : table.speakers) {
    if (s.cohort != Cohort::kDysarthric) continue;
    Json row;
    row["speaker_id"] = s.speaker;
    row["perceptual"] = JsonNum(s.perceptual);
    for (Metric m : table.metrics)
      row[std::string(MetricName(m))] = JsonNum(Lookup(s.value, m));
    scatter.push_back(row);
  }
  root["scatter"] = scatter;

  if (correlations && correlations->any_computable) {
    Json corr;
    for (Metric m : correlations->metrics) {
      Json row;
      for (const std::string &g : correlations->groups) {
        const CorrelationCell &c = correlations->cells.at(m).at(g);
        Json cell;
        cell["pearson"] = JsonNum(c.pearson);
        cell["pairs"] = c.pairs;
        if (!c.pearson) cell["reason"] = c.reason;
        row[g] = cell;
      }
      corr[std::string(MetricName(m))] = row;
    }
    root["correlations"] = corr;
  } else {
    root["correlations"] = nullptr;
    root["correlation_status"] = kNoCorrelations;
  }
  if (validation) {
    root["validation"] = {{"warnings", validation->warnings},
                          {"excluded", validation->excluded}};
  }
  return root.dump(2) + "\n";
}

ScoreTable ParseScoresCsv(std::string_view text, std::string_view origin) {
  auto lines = internal::ContentLines(text);
  if (lines.empty()) internal::ParseFailure(origin, 1, "empty scores file");
  auto header = internal::SplitChar(lines.front().text, ',');
  if (header.size() < 3 || header[0] != "speaker_id" || header[1] != "cohort" ||
      header[2] != "perceptual")
    internal::ParseFailure(origin, lines.front().number,
                           "expected header 'speaker_id,cohort,perceptual,...'");
  ScoreTable table;
  for (std::size_t i = 3; i < header.size(); ++i) {
    try {
      table.metrics.push_back(ParseMetric(header[i]));
    } catch (const Error &e) {
      internal::ParseFailure(origin, lines.front().number, e.what());
    }
  }
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const internal::Line &line = lines[li];
    auto f = internal::SplitChar(line.text, ',');
    if (f.size() != header.size())
      internal::ParseFailure(origin, line.number, "column count differs from header");
    SpeakerScore s;
    s.speaker = std::string(f[0]);
    if (f[1] == "healthy") {
      s.cohort = Cohort::kHealthy;
    } else if (f[1] == "dysarthric") {
      s.cohort = Cohort::kDysarthric;
    } else {
      internal::ParseFailure(origin, line.number, "unknown cohort");
    }
    if (f[2] != "NA") s.perceptual = internal::ParseDouble(f[2], origin, line.number);
    for (std::size_t i = 0; i < table.metrics.size(); ++i)
      if (f[i + 3] != "NA")
        s.value[table.metrics[i]] = internal::ParseDouble(f[i + 3], origin, line.number);
    table.speakers.push_back(std::move(s));
  }
  return table;
}

void WriteScoreReport(const std::filesystem::path &dir, const ScoreReportFiles &files) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::kIo, fmt::format("cannot create {}: {}", dir.string(), ec.message()));
  internal::WriteFile(dir / "scores.csv", ScoresCsv(*files.scores));
  internal::WriteFile(dir / "word_scores.csv", WordScoresCsv(*files.scores));
  internal::WriteFile(dir / "scatter.csv", ScatterCsv(*files.scores));
  if (files.correlations)
    internal::WriteFile(dir / "correlations.csv", CorrelationsCsv(*files.correlations));
  if (files.normalization)
    internal::WriteFile(dir / "normalization.csv", NormalizationCsv(*files.normalization));
  internal::WriteFile(dir / "report.json",
                      ScoreReportJson(*files.scores, files.correlations, files.validation));
}

namespace {

Json SelectionToJson(const SubsetResult &r, const SelectionContext &c) {
  Json j;
  j["words"] = r.words;
  j["size"] = r.words.size();
  j["cost"] = JsonNum(r.cost);
  j["alphas"] = {JsonNum(c.alphas.a1), JsonNum(c.alphas.a2), JsonNum(c.alphas.a3)};
  j["metric"] = c.metric ? Json(MetricName(*c.metric)) : Json(nullptr);
  j["terms"] = {{"size", JsonNum(r.size_term)},
                {"correlation", JsonNum(r.corr_term)},
                {"effort", JsonNum(r.effort_term)}};
  j["raw"] = {{"size", r.words.size()},
              {"pool_size", c.pool.size()},
              {"pearson", JsonNum(r.pearson)},
              {"subset_effort", r.subset_effort},
              {"pool_effort", r.pool_effort}};
  j["correlation_mode"] = c.signed_correlation ? "signed" : "absolute";
  j["search"] = {{"mode", r.exhaustive ? "exhaustive" : "greedy (not optimal)"},
                 {"subsets_evaluated", r.subsets_evaluated},
                 {"subsets_skipped", r.subsets_skipped}};
  j["pool"] = c.pool;
  return j;
}

}  // namespace

std::string SelectionJson(const SubsetResult &result, const SelectionContext &context) {
  return SelectionToJson(result, context).dump(2) + "\n";
}

std::string SelectionText(const SubsetResult &r, const SelectionContext &c) {
  std::string out;
  out += fmt::format("selected {} of {} words:", r.words.size(), c.pool.size());
  for (const std::string &w : r.words) out += " " + w;
  out += "\n";
  out += fmt::format("cost          {}\n", internal::FormatFixed(r.cost));
  out += fmt::format("alphas        {},{},{}\n", internal::FormatFixed(c.alphas.a1),
                     internal::FormatFixed(c.alphas.a2), internal::FormatFixed(c.alphas.a3));
  out += fmt::format("size term     {} ({}/{})\n", internal::FormatFixed(r.size_term),
                     r.words.size(), c.pool.size());
  out += fmt::format("corr term     {} (pearson {}{})\n", internal::FormatFixed(r.corr_term),
                     Num(r.pearson), c.metric ? fmt::format(", metric {}", MetricName(*c.metric)) : "");
  out += fmt::format("effort term   {} ({}/{})\n", internal::FormatFixed(r.effort_term),
                     r.subset_effort, r.pool_effort);
  out += fmt::format("search        {}, {} subsets evaluated, {} skipped\n",
                     r.exhaustive ? "exhaustive" : "greedy (NOT guaranteed optimal)",
                     r.subsets_evaluated, r.subsets_skipped);
  return out;
}

}  // namespace dysintel
