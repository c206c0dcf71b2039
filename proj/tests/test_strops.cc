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

#include <optional>
#include <random>

#include <doctest.h>

#include "dysintel/errors.h"
#include "dysintel/strops.h"
#include "oracles.h"

using namespace dysintel;
using dysintel::testing::AllTokens;
using dysintel::testing::RandomCharSeq;

namespace {

const Token U = Token::kUnk;
const Token _ = Token::kSpace;

CharSeq Word(std::string_view w) { return SpellWord(w); }

// n a a _ t t t <unk> u u u _ r r r r <unk> e e <unk>
CharSeq WorkedExample() {
  return ParseCharSeq("n a a _ t t t <unk> u u u _ r r r r <unk> e e <unk>");
}

CharSeq Composite1(const CharSeq &s) { return Squeeze(Delete(Delete(s, U), _)); }
CharSeq Composite2(const CharSeq &s) { return Squeeze(Delete(Delete(s, _), U)); }
CharSeq Composite3(const CharSeq &s) { return Delete(Delete(Squeeze(s), _), U); }
CharSeq Composite4(const CharSeq &s) { return Delete(Squeeze(Delete(s, _)), U); }


// True when two equal letters/apostrophes are separated only by a nonempty
// run of SPACE/UNK tokens.
bool HasSeparatedRepeat(const CharSeq &s) {
  std::optional<Token> last;
  bool gap = false;
  for (Token t : s) {
    if (t == U || t == _) {
      gap = true;
      continue;
    }
    if (gap && last == t) return true;
    last = t;
    gap = false;
  }
  return false;
}

}  // namespace

TEST_CASE("token encoding round-trips") {
  CHECK(kNumTokens == 29);
  for (Token t : AllTokens()) CHECK(ParseToken(TokenText(t)) == t);
  CHECK(ParseToken("<unk>") == U);
  CHECK(ParseToken("_") == _);
  CHECK(ParseToken("'") == Token::kApostrophe);
  CHECK_THROWS_AS(ParseToken("A"), Error);
  CHECK_THROWS_AS(ParseToken("unk"), Error);
  CHECK_THROWS_AS(ParseToken("ab"), Error);
  CharSeq s = WorkedExample();
  CHECK(ParseCharSeq(FormatCharSeq(s)) == s);
  CHECK(ParseCharSeq("") == CharSeq{});
  CHECK(ParseCharSeq("  a\tb \n") == Word("ab"));
}

TEST_CASE("unk is one token") {
  CharSeq s = ParseCharSeq("<unk>");
  REQUIRE(s.size() == 1);
  CHECK(s[0] == U);
  CHECK(RenderCharSeq(WorkedExample()) == "naa ttt<unk>uuu rrrr<unk>ee<unk>");
}

TEST_CASE("spelling") {
  CHECK(Word("Nature") == Word("nature"));
  CHECK(Word("don't").size() == 5);
  CHECK(Word("don't")[3] == Token::kApostrophe);
  CHECK_THROWS_AS(Word("two words"), Error);
  CHECK_THROWS_AS(Word("x1"), Error);
}

TEST_CASE("count and length on the worked example") {
  CharSeq s = WorkedExample();
  CHECK(Length(s) == 20);
  CHECK(CountPattern(s, U) == 3);
  CHECK(CountPattern(s, _) == 2);
  CHECK(CountPattern(CharSeq{}, Letter('a')) == 0);
  CHECK(CountPattern(Word("aaa"), Letter('a')) == 3);
  CHECK(Length(CharSeq{}) == 0);
  CHECK(Length(Word("nature")) == 6);
}

TEST_CASE("squeeze and delete on the worked example") {
  CharSeq s = WorkedExample();
  CHECK(Squeeze(s) == ParseCharSeq("n a _ t <unk> u _ r <unk> e <unk>"));
  CHECK(Delete(s, U) == ParseCharSeq("n a a _ t t t u u u _ r r r r e e"));
  CHECK(Squeeze(Word("aabbaa")) == Word("aba"));
  CHECK(Delete(Word("nature"), U) == Word("nature"));
  for (const auto &f : {Composite1, Composite2, Composite3, Composite4})
    CHECK(f(s) == Word("nature"));
}

TEST_CASE("squeeze collapses unk and space runs too") {
  CHECK(Squeeze(CharSeq{U, U, U}) == CharSeq{U});
  CHECK(Squeeze(CharSeq{_, _, Letter('a'), _, _}) == CharSeq{_, Letter('a'), _});
}

TEST_CASE("composites differ when a separator splits a repeated letter") {
  // The squeeze-first and delete-first forms are only interchangeable when
  // no SPACE/UNK run separates two equal tokens.
  CharSeq s{Letter('a'), _, Letter('a')};
  CHECK(Composite1(s) == Word("a"));
  CHECK(Composite2(s) == Word("a"));
  CHECK(Composite3(s) == Word("aa"));
  CHECK(Composite4(s) == Word("a"));
  CharSeq t{Letter('a'), U, _, Letter('a')};
  CHECK(Composite3(t) == Word("aa"));
  CHECK(Composite4(t) == Word("aa"));
  CHECK(Composite1(t) == Word("a"));
  CHECK(Composite2(t) == Word("a"));
}

TEST_CASE("algebraic properties on random sequences") {
  std::mt19937_64 rng(7);
  const auto tokens = AllTokens();
  for (int iter = 0; iter < 10000; ++iter) {
    CharSeq s = RandomCharSeq(rng, 0, 24, tokens);
    Token p = tokens[iter % tokens.size()];
    CharSeq sq = Squeeze(s);
    CHECK(Squeeze(sq) == sq);
    CHECK(Delete(Delete(s, p), p) == Delete(s, p));
    CHECK(CountPattern(Delete(s, p), p) == 0);
    CHECK(Length(Delete(s, p)) == Length(s) - CountPattern(s, p));
    CHECK(Length(sq) <= Length(s));
    CHECK(Length(Delete(s, p)) <= Length(s));
    for (std::size_t i = 1; i < sq.size(); ++i) CHECK(sq[i] != sq[i - 1]);
    // Deletions commute, so the two delete-first composites always agree.
    CHECK(Composite1(s) == Composite2(s));
    // All four agree exactly when no separator run splits a repeat.
    const bool agree = Composite3(s) == Composite1(s) && Composite4(s) == Composite1(s);
    CHECK(agree == !HasSeparatedRepeat(s));
  }
}
