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

#include <chrono>
#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>
#include <fmt/format.h>

#include "dysintel/errors.h"
#include "dysintel/selection.h"
#include "oracles.h"

using namespace dysintel;
using namespace dysintel::testing;

namespace {

struct RandomPool {
  std::map<std::string, int> effort;
  std::vector<SpeakerScores> speakers;
  std::vector<OracleSpeaker> oracle;
};

RandomPool MakePool(std::mt19937_64 &rng, std::size_t n, std::size_t num_speakers) {
  RandomPool p;
  std::uniform_int_distribution<int> effort(5, 50);
  std::uniform_real_distribution<double> score(0, 100);
  for (std::size_t i = 0; i < n; ++i) p.effort[fmt::format("w{:02}", i)] = effort(rng);
  for (std::size_t s = 0; s < num_speakers; ++s) {
    SpeakerScores sp;
    sp.speaker = fmt::format("S{}", s);
    sp.perceptual = score(rng);
    for (const auto &[w, e] : p.effort) sp.by_word[w] = score(rng);
    p.oracle.push_back({sp.perceptual, sp.by_word});
    p.speakers.push_back(std::move(sp));
  }
  return p;
}

ErrorKind KindOf(auto &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::kIo;
}

}  // namespace

TEST_CASE("alphas and presets") {
  Alphas a = Alphas::Parse("1,0.5,2");
  CHECK(a.a1 == 1.0);
  CHECK(a.a2 == 0.5);
  CHECK(a.a3 == 2.0);
  CHECK_THROWS_AS(Alphas::Parse("1,2"), Error);
  CHECK_THROWS_AS(Alphas::Parse("1,x,2"), Error);
  CHECK_THROWS_AS(Alphas::Parse("1,-1,2"), Error);
  CHECK_THROWS_AS(Alphas::Parse("0,0,0"), Error);
  Alphas d = ScenarioAlphas(ParseScenario("dictionary-only"));
  CHECK((d.a1 == 1 && d.a2 == 0 && d.a3 == 1));
  Alphas c = ScenarioAlphas(ParseScenario("correlation-only"));
  CHECK((c.a1 == 1 && c.a2 == 1 && c.a3 == 0));
  Alphas f = ScenarioAlphas(ParseScenario("full"));
  CHECK((f.a1 == 1 && f.a2 == 1 && f.a3 == 1));
  CHECK_THROWS_AS(ParseScenario("everything"), Error);
}

TEST_CASE("pearson") {
  std::vector<double> x{1, 2, 3, 4}, y{2, 4, 6, 8}, z{8, 6, 4, 2};
  CHECK(Pearson(x, y) == doctest::Approx(1.0));
  CHECK(Pearson(x, z) == doctest::Approx(-1.0));
  std::vector<double> a{1, 2, 3, 4, 5}, b{2, 1, 4, 3, 6};
  CHECK(Pearson(a, b) == doctest::Approx(*NaivePearson(a, b)).epsilon(1e-12));
  std::vector<double> two{1, 2}, flat{3, 3, 3, 3};
  CHECK(KindOf([&] { Pearson(two, two); }) == ErrorKind::kUndefinedCorrelation);
  CHECK(KindOf([&] { Pearson(x, flat); }) == ErrorKind::kUndefinedCorrelation);
  CHECK(KindOf([&] { Pearson(x, a); }) == ErrorKind::kUndefinedCorrelation);
  // Constant up to rounding noise is still constant.
  std::vector<double> almost{0.1 + 0.2, 0.3, 0.30000000000000004, 0.3};
  CHECK(KindOf([&] { Pearson(x, almost); }) == ErrorKind::kUndefinedCorrelation);
}

TEST_CASE("subset speaker score") {
  std::map<std::string, double> s{{"a", 90}, {"b", 60}, {"c", 30}};
  std::vector<std::string> ab{"a", "b"}, ad{"a", "d"};
  CHECK(SubsetSpeakerScore(ab, s) == 75.0);
  CHECK_THROWS_AS(SubsetSpeakerScore(ad, s), Error);
  CHECK_THROWS_AS(SubsetSpeakerScore(std::vector<std::string>{}, s), Error);
}

TEST_CASE("cost decomposition") {
  SelectionProblem p({{"a", 10}, {"b", 30}, {"c", 20}});
  CHECK(p.pool() == std::vector<std::string>{"a", "b", "c"});
  CHECK(p.total_effort() == 60);
  std::vector<std::string> w{"b"};
  SubsetResult r = SubsetCost(p, w, Alphas{1, 0, 1});
  CHECK(r.size_term == doctest::Approx(1.0 / 3.0));
  CHECK(r.effort_term == doctest::Approx(0.5));
  CHECK(r.cost == doctest::Approx(1.0 / 3.0 - 0.5));
  CHECK_FALSE(r.pearson.has_value());
  CHECK(KindOf([&] { SubsetCost(p, std::vector<std::string>{"zz"}, Alphas{1, 0, 1}); }) ==
        ErrorKind::kUnknownWord);
  // A correlation weight needs speakers.
  CHECK(KindOf([&] { SubsetCost(p, w, Alphas{1, 1, 1}); }) == ErrorKind::kMissingData);
  CHECK(KindOf([&] { Optimize(p, Alphas{1, 1, 1}); }) == ErrorKind::kMissingData);
}

TEST_CASE("problem construction errors") {
  CHECK(KindOf([] { SelectionProblem p(std::map<std::string, int>{}); }) == ErrorKind::kNoData);
  CHECK(KindOf([] { SelectionProblem p({{"a", -1}}); }) == ErrorKind::kInvalidArgument);
  std::vector<SpeakerScores> s{{"S", 50, {{"a", 1}}}};
  CHECK(KindOf([&] { SelectionProblem p({{"a", 1}, {"b", 2}}, s); }) == ErrorKind::kMissingData);
}

TEST_CASE("optimizer agrees with the exhaustive oracle") {
  std::mt19937_64 rng(2024);
  const Alphas presets[] = {{1, 0, 1}, {1, 1, 0}, {1, 1, 1}};
  for (int pool = 0; pool < 200; ++pool) {
    const std::size_t n = 1 + pool % 10;
    RandomPool rp = MakePool(rng, n, 3 + pool % 6);
    SelectionProblem problem(rp.effort, rp.speakers);
    for (const Alphas &a : presets) {
      OracleResult want = NaiveOptimize(rp.effort, rp.oracle, a.a1, a.a2, a.a3);
      SubsetResult got = Optimize(problem, a);
      INFO("pool ", pool, " alphas ", a.a1, ",", a.a2, ",", a.a3);
      REQUIRE(got.words == want.words);
      CHECK(got.cost == doctest::Approx(want.cost).epsilon(1e-9));
      CHECK(got.subsets_evaluated == (1u << n) - 1);
      CHECK(got.exhaustive);
    }
    // The dictionary-only optimum is exactly the above-mean-effort set.
    auto above = AboveMeanSet(rp.effort);
    if (!above.empty()) CHECK(Optimize(problem, Alphas{1, 0, 1}).words == above);
  }
}

TEST_CASE("signed correlation option agrees with the oracle") {
  std::mt19937_64 rng(99);
  for (int pool = 0; pool < 40; ++pool) {
    RandomPool rp = MakePool(rng, 2 + pool % 7, 5);
    SelectionProblem problem(rp.effort, rp.speakers);
    OptimizeOptions opts;
    opts.cost.signed_correlation = true;
    OracleResult want = NaiveOptimize(rp.effort, rp.oracle, 1, 1, 1, true);
    CHECK(Optimize(problem, Alphas{1, 1, 1}, opts).words == want.words);
  }
}

TEST_CASE("scaling every alpha leaves the optimum unchanged") {
  std::mt19937_64 rng(31);
  for (int pool = 0; pool < 50; ++pool) {
    RandomPool rp = MakePool(rng, 3 + pool % 8, 6);
    SelectionProblem problem(rp.effort, rp.speakers);
    for (double scale : {0.5, 3.0, 10.0}) {
      CHECK(Optimize(problem, Alphas{1, 1, 1}).words ==
            Optimize(problem, Alphas{scale, scale, scale}).words);
      CHECK(Optimize(problem, Alphas{1, 0, 1}).words ==
            Optimize(problem, Alphas{scale, 0, scale}).words);
    }
  }
}

TEST_CASE("result is identical for any worker count") {
  std::mt19937_64 rng(77);
  for (int pool = 0; pool < 20; ++pool) {
    RandomPool rp = MakePool(rng, 8 + pool % 7, 7);
    SelectionProblem problem(rp.effort, rp.speakers);
    OptimizeOptions one;
    SubsetResult base = Optimize(problem, Alphas{1, 1, 1}, one);
    for (unsigned w : {2u, 3u, 4u, 8u, 13u}) {
      OptimizeOptions many;
      many.workers = w;
      SubsetResult r = Optimize(problem, Alphas{1, 1, 1}, many);
      CHECK(r.words == base.words);
      CHECK(r.cost == base.cost);
      CHECK(r.subsets_evaluated == base.subsets_evaluated);
    }
  }
}

TEST_CASE("ties prefer fewer words, then the earlier word list") {
  // Every word sits at the mean effort, so under (1,0,1) each contributes
  // 1/3 - 4/12 = 0 and every subset costs exactly 0; the first singleton wins.
  SelectionProblem p({{"b", 4}, {"a", 4}, {"c", 4}});
  SubsetResult r = Optimize(p, Alphas{1, 0, 1});
  CHECK(r.cost == 0.0);
  CHECK(r.words == std::vector<std::string>{"a"});
  // A zero-effort word only adds size cost.
  SelectionProblem q({{"a", 9}, {"b", 9}, {"c", 0}});
  CHECK(Optimize(q, Alphas{1, 0, 1}).words == std::vector<std::string>{"a", "b"});
}

TEST_CASE("undefined correlations are skipped and counted") {
  // Speaker scores identical across speakers for word "flat".
  std::vector<SpeakerScores> s{{"A", 10, {{"flat", 5}, {"x", 1}}},
                               {"B", 50, {{"flat", 5}, {"x", 2}}},
                               {"C", 90, {{"flat", 5}, {"x", 4}}}};
  SelectionProblem p({{"flat", 1}, {"x", 1}}, s);
  SubsetResult r = Optimize(p, Alphas{1, 1, 0});
  CHECK(r.subsets_skipped == 1);
  CHECK(r.subsets_evaluated == 3);
  CHECK(r.words == std::vector<std::string>{"x"});
  std::vector<SpeakerScores> all_flat{{"A", 10, {{"flat", 5}}},
                                      {"B", 50, {{"flat", 5}}},
                                      {"C", 90, {{"flat", 5}}}};
  SelectionProblem q({{"flat", 1}}, all_flat);
  CHECK(KindOf([&] { Optimize(q, Alphas{1, 1, 0}); }) == ErrorKind::kUndefinedCorrelation);
}

TEST_CASE("large pools need the heuristic") {
  std::mt19937_64 rng(5);
  RandomPool rp = MakePool(rng, 25, 4);
  SelectionProblem problem(rp.effort, rp.speakers);
  CHECK(KindOf([&] { Optimize(problem, Alphas{1, 1, 1}); }) == ErrorKind::kRefused);
  OptimizeOptions greedy;
  greedy.allow_heuristic = true;
  SubsetResult r = Optimize(problem, Alphas{1, 1, 1}, greedy);
  CHECK_FALSE(r.exhaustive);
  CHECK_FALSE(r.words.empty());
  // The greedy result is a real subset with a correctly reported cost.
  CHECK(SubsetCost(problem, r.words, Alphas{1, 1, 1}).cost == doctest::Approx(r.cost));
  // Lowering the limit refuses smaller pools too.
  OptimizeOptions small;
  small.max_exhaustive_n = 5;
  RandomPool six = MakePool(rng, 6, 4);
  CHECK(KindOf([&] { Optimize(SelectionProblem(six.effort, six.speakers), Alphas{1, 0, 1}, small); }) ==
        ErrorKind::kRefused);
}

TEST_CASE("fourteen-word full search is fast") {
  std::mt19937_64 rng(14);
  RandomPool rp = MakePool(rng, 14, 8);
  SelectionProblem problem(rp.effort, rp.speakers);
  auto t0 = std::chrono::steady_clock::now();
  SubsetResult r = Optimize(problem, Alphas{1, 1, 1});
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(r.subsets_evaluated == 16383);
  CHECK(secs < 1.0);
}
