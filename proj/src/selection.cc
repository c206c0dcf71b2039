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

#include "dysintel/selection.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <thread>

#include <fmt/format.h>

#include "dysintel/errors.h"
#include "text_util.h"

namespace dysintel {

void Alphas::Validate() const {
  for (double a : {a1, a2, a3}) {
    if (!(a >= 0.0) || !std::isfinite(a))
      throw Error(ErrorKind::kInvalidArgument,
                  "alpha weights must be finite and nonnegative");
  }
  if (a1 == 0.0 && a2 == 0.0 && a3 == 0.0)
    throw Error(ErrorKind::kInvalidArgument, "alpha weights are all zero");
}

Alphas Alphas::Parse(std::string_view text) {
  auto parts = internal::SplitChar(text, ',');
  if (parts.size() != 3)
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("expected three comma-separated alphas, got '{}'", text));
  Alphas a;
  try {
    a.a1 = internal::ParseDouble(parts[0], "--alphas", 1);
    a.a2 = internal::ParseDouble(parts[1], "--alphas", 1);
    a.a3 = internal::ParseDouble(parts[2], "--alphas", 1);
  } catch (const Error &e) {
    throw Error(ErrorKind::kInvalidArgument, e.what());
  }
  a.Validate();
  return a;
}

Alphas ScenarioAlphas(Scenario s) {
  switch (s) {
    case Scenario::kDictionaryOnly: return {1.0, 0.0, 1.0};
    case Scenario::kCorrelationOnly: return {1.0, 1.0, 0.0};
    case Scenario::kFull: return {1.0, 1.0, 1.0};
  }
  return {};
}

Scenario ParseScenario(std::string_view name) {
  if (name == "dictionary-only") return Scenario::kDictionaryOnly;
  if (name == "correlation-only") return Scenario::kCorrelationOnly;
  if (name == "full") return Scenario::kFull;
  throw Error(ErrorKind::kInvalidArgument,
              fmt::format("unknown preset '{}'", name));
}

namespace {

// Relative threshold below which a series counts as constant.
constexpr double kConstantTolerance = 1e-12;

std::optional<double> TryPearson(std::span<const double> x,
                                 std::span<const double> y) {
  const std::size_t n = x.size();
  if (n < 3 || y.size() != n) return std::nullopt;
  double mx = 0.0, my = 0.0, scale_x = 0.0, scale_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
    scale_x = std::max(scale_x, std::abs(x[i]));
    scale_y = std::max(scale_y, std::abs(y[i]));
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  const double nx = std::sqrt(sxx), ny = std::sqrt(syy);
  const double rn = std::sqrt(static_cast<double>(n));
  if (nx <= kConstantTolerance * scale_x * rn || ny <= kConstantTolerance * scale_y * rn ||
      nx == 0.0 || ny == 0.0)
    return std::nullopt;
  return std::clamp(sxy / (nx * ny), -1.0, 1.0);
}

}  // namespace

double Pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    throw Error(ErrorKind::kUndefinedCorrelation,
                "correlation series differ in length");
  if (x.size() < 3)
    throw Error(ErrorKind::kUndefinedCorrelation,
                fmt::format("correlation needs at least 3 points, got {}", x.size()));
  auto r = TryPearson(x, y);
  if (!r)
    throw Error(ErrorKind::kUndefinedCorrelation,
                "correlation undefined for a constant series");
  return *r;
}

double SubsetSpeakerScore(std::span<const std::string> subset,
                          const std::map<std::string, double> &scores_by_word) {
  if (subset.empty()) throw Error(ErrorKind::kNoData, "empty word subset");
  double sum = 0.0;
  for (const std::string &w : subset) {
    auto it = scores_by_word.find(w);
    if (it == scores_by_word.end())
      throw Error(ErrorKind::kMissingData,
                  fmt::format("no score for word '{}'", w));
    sum += it->second;
  }
  return sum / static_cast<double>(subset.size());
}

SelectionProblem::SelectionProblem(const std::map<std::string, int> &effort_by_word,
                                   std::vector<SpeakerScores> speakers) {
  if (effort_by_word.empty())
    throw Error(ErrorKind::kNoData, "empty candidate pool");
  for (const auto &[word, effort] : effort_by_word) {
    if (effort < 0)
      throw Error(ErrorKind::kInvalidArgument,
                  fmt::format("negative effort for '{}'", word));
    pool_.push_back(word);
    efforts_.push_back(effort);
    total_effort_ += effort;
  }
  std::sort(speakers.begin(), speakers.end(),
            [](const SpeakerScores &a, const SpeakerScores &b) {
              return a.speaker < b.speaker;
            });
  for (const SpeakerScores &s : speakers) {
    for (const std::string &w : pool_) {
      auto it = s.by_word.find(w);
      if (it == s.by_word.end())
        throw Error(ErrorKind::kMissingData,
                    fmt::format("speaker '{}' has no score for '{}'", s.speaker, w));
      scores_.push_back(it->second);
    }
    perceptual_.push_back(s.perceptual);
  }
}

namespace {

struct Scored {
  double cost = 0.0;
  double corr_term = 0.0;
  std::optional<double> pearson;
  long effort = 0;
};

class Evaluator {
 public:
  Evaluator(const SelectionProblem &p, const Alphas &a, const CostOptions &c)
      : problem_(p), alphas_(a), options_(c) {}

  // `idx` ascending and nonempty. `means` is scratch space.
  std::optional<Scored> Evaluate(std::span<const std::size_t> idx,
                                 std::vector<double> &means) const {
    Scored s;
    for (std::size_t i : idx) s.effort += problem_.efforts()[i];
    const double n = static_cast<double>(problem_.size());
    const double k = static_cast<double>(idx.size());
    const double total = static_cast<double>(problem_.total_effort());
    // Integer-valued numerator keeps equal-cost subsets exactly equal for
    // integer alphas.
    double base;
    if (total > 0.0) {
      base = (alphas_.a1 * k * total - alphas_.a3 * static_cast<double>(s.effort) * n) /
             (n * total);
    } else {
      base = alphas_.a1 * k / n;
    }
    if (alphas_.a2 > 0.0) {
      const std::size_t ns = problem_.num_speakers();
      means.assign(ns, 0.0);
      for (std::size_t sp = 0; sp < ns; ++sp) {
        double sum = 0.0;
        for (std::size_t i : idx) sum += problem_.score(sp, i);
        means[sp] = sum / k;
      }
      auto r = TryPearson(means, problem_.perceptual());
      if (!r) return std::nullopt;
      s.pearson = *r;
      s.corr_term = options_.signed_correlation ? *r : std::abs(*r);
    }
    s.cost = base - alphas_.a2 * s.corr_term;
    return s;
  }

  SubsetResult Describe(std::span<const std::size_t> idx, const Scored &s) const {
    SubsetResult r;
    for (std::size_t i : idx) r.words.push_back(problem_.pool()[i]);
    r.cost = s.cost;
    r.size_term = static_cast<double>(idx.size()) / static_cast<double>(problem_.size());
    r.corr_term = s.corr_term;
    r.pearson = s.pearson;
    r.subset_effort = s.effort;
    r.pool_effort = problem_.total_effort();
    r.effort_term = problem_.total_effort() > 0
                        ? static_cast<double>(s.effort) /
                              static_cast<double>(problem_.total_effort())
                        : 0.0;
    return r;
  }

 private:
  const SelectionProblem &problem_;
  Alphas alphas_;
  CostOptions options_;
};

void RequireSpeakers(const SelectionProblem &problem, const Alphas &alphas) {
  if (alphas.a2 > 0.0 && problem.num_speakers() < 3) {
    throw Error(ErrorKind::kMissingData,
                fmt::format("correlation term needs perceptual scores for at "
                            "least 3 dysarthric speakers, have {}",
                            problem.num_speakers()));
  }
}

// Total order on candidates: cost, then size, then lexicographic word list.
struct Best {
  bool valid = false;
  double cost = 0.0;
  std::uint64_t mask = 0;
  Scored scored;
};

bool Better(double cost_a, std::uint64_t a, double cost_b, std::uint64_t b) {
  if (cost_a != cost_b) return cost_a < cost_b;
  const int sa = std::popcount(a), sb = std::popcount(b);
  if (sa != sb) return sa < sb;
  // Equal sizes: the mask holding the lowest differing index sorts first.
  const std::uint64_t diff = a ^ b;
  return diff != 0 && (a & (diff & (~diff + 1))) != 0;
}

void Merge(Best &into, const Best &other) {
  if (!other.valid) return;
  if (!into.valid || Better(other.cost, other.mask, into.cost, into.mask))
    into = other;
}

void MaskIndices(std::uint64_t mask, std::vector<std::size_t> &out) {
  out.clear();
  while (mask) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
}

struct ChunkResult {
  Best best;
  std::uint64_t evaluated = 0;
  std::uint64_t skipped = 0;
};

ChunkResult SearchRange(const Evaluator &eval, std::uint64_t begin,
                        std::uint64_t end) {
  ChunkResult out;
  std::vector<std::size_t> idx;
  std::vector<double> means;
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    MaskIndices(mask, idx);
    ++out.evaluated;
    auto s = eval.Evaluate(idx, means);
    if (!s) {
      ++out.skipped;
      continue;
    }
    Merge(out.best, Best{true, s->cost, mask, *s});
  }
  return out;
}

SubsetResult Exhaustive(const SelectionProblem &problem, const Evaluator &eval,
                        unsigned workers) {
  const std::uint64_t end = std::uint64_t{1} << problem.size();
  const std::uint64_t count = end - 1;
  workers = std::max(1u, workers);
  if (workers > count) workers = static_cast<unsigned>(count);

  std::vector<ChunkResult> chunks(workers);
  {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = 1 + count * w / workers;
      const std::uint64_t hi = 1 + count * (w + 1) / workers;
      threads.emplace_back([&, w, lo, hi] { chunks[w] = SearchRange(eval, lo, hi); });
    }
  }
  ChunkResult total;
  for (const ChunkResult &c : chunks) {
    Merge(total.best, c.best);
    total.evaluated += c.evaluated;
    total.skipped += c.skipped;
  }
  if (!total.best.valid)
    throw Error(ErrorKind::kUndefinedCorrelation,
                "correlation undefined for every subset");
  std::vector<std::size_t> idx;
  MaskIndices(total.best.mask, idx);
  SubsetResult r = eval.Describe(idx, total.best.scored);
  r.subsets_evaluated = total.evaluated;
  r.subsets_skipped = total.skipped;
  r.exhaustive = true;
  return r;
}

// Forward selection: add the word that lowers the cost most, stop when no
// addition helps.
SubsetResult Greedy(const SelectionProblem &problem, const Evaluator &eval) {
  std::vector<std::size_t> chosen;
  std::vector<bool> used(problem.size(), false);
  std::optional<Scored> current;
  std::vector<double> means;
  std::uint64_t evaluated = 0, skipped = 0;
  while (chosen.size() < problem.size()) {
    std::optional<Scored> best;
    std::size_t best_word = 0;
    for (std::size_t w = 0; w < problem.size(); ++w) {
      if (used[w]) continue;
      std::vector<std::size_t> trial = chosen;
      trial.insert(std::upper_bound(trial.begin(), trial.end(), w), w);
      ++evaluated;
      auto s = eval.Evaluate(trial, means);
      if (!s) {
        ++skipped;
        continue;
      }
      // Candidates share a size, so the lowest index wins ties.
      if (!best || s->cost < best->cost) {
        best = s;
        best_word = w;
      }
    }
    if (!best || (current && !(best->cost < current->cost))) break;
    used[best_word] = true;
    chosen.insert(std::upper_bound(chosen.begin(), chosen.end(), best_word),
                  best_word);
    current = best;
  }
  if (!current)
    throw Error(ErrorKind::kUndefinedCorrelation,
                "correlation undefined for every single-word subset");
  SubsetResult r = eval.Describe(chosen, *current);
  r.subsets_evaluated = evaluated;
  r.subsets_skipped = skipped;
  r.exhaustive = false;
  return r;
}

}  // namespace

SubsetResult SubsetCost(const SelectionProblem &problem,
                        std::span<const std::string> subset, const Alphas &alphas,
                        const CostOptions &cost_options) {
  alphas.Validate();
  RequireSpeakers(problem, alphas);
  if (subset.empty()) throw Error(ErrorKind::kNoData, "empty word subset");
  std::vector<std::size_t> idx;
  for (const std::string &w : subset) {
    auto it = std::lower_bound(problem.pool().begin(), problem.pool().end(), w);
    if (it == problem.pool().end() || *it != w)
      throw Error(ErrorKind::kUnknownWord,
                  fmt::format("word '{}' is not in the candidate pool", w));
    idx.push_back(static_cast<std::size_t>(it - problem.pool().begin()));
  }
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  Evaluator eval(problem, alphas, cost_options);
  std::vector<double> means;
  auto s = eval.Evaluate(idx, means);
  if (!s)
    throw Error(ErrorKind::kUndefinedCorrelation,
                "correlation undefined for this subset");
  SubsetResult r = eval.Describe(idx, *s);
  r.subsets_evaluated = 1;
  return r;
}

SubsetResult Optimize(const SelectionProblem &problem, const Alphas &alphas,
                      const OptimizeOptions &options) {
  alphas.Validate();
  RequireSpeakers(problem, alphas);
  Evaluator eval(problem, alphas, options.cost);
  const std::size_t limit = std::min<std::size_t>(options.max_exhaustive_n, 62);
  if (problem.size() <= limit) return Exhaustive(problem, eval, options.workers);
  if (!options.allow_heuristic)
    throw Error(ErrorKind::kRefused,
                fmt::format("pool of {} words exceeds the exhaustive limit of {}; "
                            "pass the heuristic flag for a greedy, non-optimal "
                            "selection or shrink the pool",
                            problem.size(), options.max_exhaustive_n));
  return Greedy(problem, eval);
}

}  // namespace dysintel
