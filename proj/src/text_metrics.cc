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

#include "dysintel/text_metrics.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "dysintel/errors.h"

namespace dysintel {

std::string_view MetricName(Metric m) {
  switch (m) {
    case Metric::kOs: return "os";
    case Metric::kSm: return "sm";
    case Metric::kLd: return "ld";
    case Metric::kUnk: return "unk";
  }
  return "?";
}

Metric ParseMetric(std::string_view name) {
  if (name == "os") return Metric::kOs;
  if (name == "sm") return Metric::kSm;
  if (name == "ld") return Metric::kLd;
  if (name == "unk") return Metric::kUnk;
  throw Error(ErrorKind::kInvalidArgument,
              "unknown metric '" + std::string(name) + "'");
}

NormalizedHypothesis NormalizeHypothesis(std::span<const Token> c_star) {
  CharSeq squeezed = Squeeze(c_star);
  NormalizedHypothesis h;
  h.unk_count = CountPattern(squeezed, Token::kUnk);
  h.s1 = Delete(Delete(squeezed, Token::kUnk), Token::kSpace);
  return h;
}

GroundTruth::GroundTruth(std::string_view word) {
  try {
    tokens_ = SpellWord(word);
  } catch (const Error &e) {
    throw Error(ErrorKind::kInvalidGroundTruth, e.what());
  }
  if (tokens_.empty())
    throw Error(ErrorKind::kInvalidGroundTruth, "empty ground truth");
}

GroundTruth::GroundTruth(CharSeq tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty())
    throw Error(ErrorKind::kInvalidGroundTruth, "empty ground truth");
  for (Token t : tokens_) {
    if (t == Token::kUnk || t == Token::kSpace)
      throw Error(ErrorKind::kInvalidGroundTruth,
                  "ground truth may not contain <unk> or space");
  }
}

namespace {

struct Block {
  std::size_t a = 0, b = 0, size = 0;
};

// Longest common contiguous block of a[alo,ahi) and b[blo,bhi).
Block LongestBlock(std::span<const Token> a, std::size_t alo, std::size_t ahi,
                   std::span<const Token> b, std::size_t blo, std::size_t bhi) {
  Block best{alo, blo, 0};
  const std::size_t width = bhi - blo;
  // run[j] = length of the common suffix ending at (i-1, blo+j-1).
  std::vector<std::size_t> prev(width + 1, 0), cur(width + 1, 0);
  for (std::size_t i = alo; i < ahi; ++i) {
    for (std::size_t j = blo; j < bhi; ++j) {
      const std::size_t k = j - blo + 1;
      cur[k] = a[i] == b[j] ? prev[k - 1] + 1 : 0;
      if (cur[k] == 0) continue;
      const std::size_t sa = i + 1 - cur[k], sb = j + 1 - cur[k];
      if (cur[k] > best.size ||
          (cur[k] == best.size && (sa < best.a || (sa == best.a && sb < best.b)))) {
        best = {sa, sb, cur[k]};
      }
    }
    std::swap(prev, cur);
    std::fill(cur.begin(), cur.end(), 0);
  }
  return best;
}

}  // namespace

std::size_t MatchingChars(std::span<const Token> a, std::span<const Token> b) {
  struct Range {
    std::size_t alo, ahi, blo, bhi;
  };
  std::size_t matched = 0;
  std::vector<Range> stack{{0, a.size(), 0, b.size()}};
  while (!stack.empty()) {
    Range r = stack.back();
    stack.pop_back();
    if (r.alo >= r.ahi || r.blo >= r.bhi) continue;
    Block m = LongestBlock(a, r.alo, r.ahi, b, r.blo, r.bhi);
    if (m.size == 0) continue;
    matched += m.size;
    stack.push_back({r.alo, m.a, r.blo, m.b});
    stack.push_back({m.a + m.size, r.ahi, m.b + m.size, r.bhi});
  }
  return matched;
}

std::size_t EditDistance(std::span<const Token> a, std::span<const Token> b) {
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1,
                         diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

double ScoreSm(const NormalizedHypothesis &h, const GroundTruth &g) {
  if (h.length() == 0) return 0.0;
  const double m = static_cast<double>(MatchingChars(h.s1, g.tokens()));
  return 100.0 * (2.0 * m) / static_cast<double>(h.length() + g.length());
}

double ScoreLd(const NormalizedHypothesis &h, const GroundTruth &g) {
  const double l = static_cast<double>(EditDistance(h.s1, g.tokens()));
  return (1.0 - l / static_cast<double>(h.length() + g.length())) * 100.0;
}

double ScoreUnk(const NormalizedHypothesis &h, const GroundTruth &g) {
  const double ratio =
      static_cast<double>(h.unk_count) / static_cast<double>(g.length());
  return (1.0 - std::min(ratio, 1.0)) * 100.0;
}

double ScoreText(Metric m, const NormalizedHypothesis &h, const GroundTruth &g) {
  switch (m) {
    case Metric::kSm: return ScoreSm(h, g);
    case Metric::kLd: return ScoreLd(h, g);
    case Metric::kUnk: return ScoreUnk(h, g);
    case Metric::kOs: break;
  }
  throw Error(ErrorKind::kInvalidArgument,
              "metric os is not computed from transcripts");
}

double AggregateSpeaker(std::span<const WordScore> scores) {
  if (scores.empty())
    throw Error(ErrorKind::kNoData, "no scored words for speaker");
  std::map<std::string, std::vector<double>> by_word;
  for (const WordScore &s : scores) by_word[s.word].push_back(s.value);
  double total = 0.0;
  for (auto &[word, values] : by_word) {
    // Sorted so the sum does not depend on input order.
    std::sort(values.begin(), values.end());
    double sum = 0.0;
    for (double v : values) sum += v;
    total += sum / static_cast<double>(values.size());
  }
  return total / static_cast<double>(by_word.size());
}

}  // namespace dysintel
