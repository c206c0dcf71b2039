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

#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace dysintel::testing {

namespace {

std::size_t EditRec(const CharSeq &a, std::size_t i, const CharSeq &b, std::size_t j) {
  if (i == a.size()) return b.size() - j;
  if (j == b.size()) return a.size() - i;
  if (a[i] == b[j]) return EditRec(a, i + 1, b, j + 1);
  return 1 + std::min({EditRec(a, i + 1, b, j), EditRec(a, i, b, j + 1),
                       EditRec(a, i + 1, b, j + 1)});
}

std::size_t MatchRec(const CharSeq &a, const CharSeq &b) {
  std::size_t best = 0, bi = 0, bj = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::size_t k = 0;
      while (i + k < a.size() && j + k < b.size() && a[i + k] == b[j + k]) ++k;
      if (k > best) std::tie(best, bi, bj) = std::make_tuple(k, i, j);
    }
  }
  if (best == 0) return 0;
  CharSeq al(a.begin(), a.begin() + bi), bl(b.begin(), b.begin() + bj);
  CharSeq ar(a.begin() + bi + best, a.end()), br(b.begin() + bj + best, b.end());
  return best + MatchRec(al, bl) + MatchRec(ar, br);
}

}  // namespace

std::size_t NaiveEditDistance(const CharSeq &a, const CharSeq &b) {
  return EditRec(a, 0, b, 0);
}

std::size_t BruteMatchingChars(const CharSeq &a, const CharSeq &b) {
  return MatchRec(a, b);
}

std::optional<double> NaivePearson(const std::vector<double> &x,
                                   const std::vector<double> &y) {
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0 || syy == 0) return std::nullopt;
  return sxy / std::sqrt(sxx * syy);
}

OracleResult NaiveOptimize(const std::map<std::string, int> &effort,
                           const std::vector<OracleSpeaker> &speakers, double a1,
                           double a2, double a3, bool signed_correlation, double tie) {
  std::vector<std::string> pool;
  std::vector<int> e;
  double total = 0;
  for (const auto &[w, v] : effort) {
    pool.push_back(w);
    e.push_back(v);
    total += v;
  }
  const std::size_t n = pool.size();
  OracleResult best;
  bool have = false;
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    std::vector<std::string> words;
    double sub_effort = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        words.push_back(pool[i]);
        sub_effort += e[i];
      }
    }
    double corr = 0;
    if (a2 != 0) {
      std::vector<double> pred, perc;
      for (const OracleSpeaker &s : speakers) {
        double sum = 0;
        for (const std::string &w : words) sum += s.by_word.at(w);
        pred.push_back(sum / static_cast<double>(words.size()));
        perc.push_back(s.perceptual);
      }
      auto r = NaivePearson(pred, perc);
      if (!r) {
        ++best.skipped;
        continue;
      }
      corr = signed_correlation ? *r : std::fabs(*r);
    }
    double cost = a1 * static_cast<double>(words.size()) / static_cast<double>(n) -
                  a2 * corr - a3 * sub_effort / total;
    bool better = !have || cost < best.cost - tie;
    if (have && !better && std::fabs(cost - best.cost) <= tie) {
      better = words.size() < best.words.size() ||
               (words.size() == best.words.size() && words < best.words);
    }
    if (better) {
      best.words = words;
      best.cost = cost;
      have = true;
    }
  }
  return best;
}

std::vector<std::string> AboveMeanSet(const std::map<std::string, int> &effort) {
  long total = 0;
  for (const auto &[w, v] : effort) total += v;
  const long n = static_cast<long>(effort.size());
  std::vector<std::string> out;
  for (const auto &[w, v] : effort)
    if (static_cast<long>(v) * n > total) out.push_back(w);
  return out;
}

CharSeq RandomCharSeq(std::mt19937_64 &rng, std::size_t min_len, std::size_t max_len,
                      const std::vector<Token> &alphabet) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  CharSeq s(len(rng));
  for (Token &t : s) t = alphabet[pick(rng)];
  return s;
}

std::vector<Token> AllTokens() {
  std::vector<Token> out;
  for (int i = 0; i < kNumTokens; ++i) out.push_back(static_cast<Token>(i));
  return out;
}

std::vector<Token> Letters(int n) {
  std::vector<Token> out;
  for (int i = 0; i < n; ++i) out.push_back(static_cast<Token>(i));
  return out;
}

}  // namespace dysintel::testing
