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

#include <string>
#include <vector>

#include <doctest.h>

#include "dysintel/errors.h"
#include "dysintel/phonetics.h"
#include "dysintel/visible_speech.h"

using namespace dysintel;

TEST_CASE("vector parsing and bit order") {
  VsVector k = VsVector::Parse("0000010010");
  CHECK(k.Has(Radical::kMouthContracted));
  CHECK(k.Has(Radical::kShutter));
  CHECK_FALSE(k.Has(Radical::kVoice));
  CHECK(k.Count() == 2);
  CHECK(k.ToString() == "0000010010");
  CHECK(VsVector::FromList({0, 0, 0, 0, 0, 1, 0, 0, 1, 0}) == k);
  CHECK(VsVector().IsRest());
  CHECK_THROWS_AS(VsVector::Parse("000001001"), Error);
  CHECK_THROWS_AS(VsVector::Parse("00000100102"), Error);
  CHECK_THROWS_AS(VsVector::Parse("000001001x"), Error);
}

TEST_CASE("transition effort is the Hamming distance") {
  VsVector n = VsVector::Parse("1000010001"), a = VsVector::Parse("1001000000");
  CHECK(TransitionEffort(n, a) == 3);
  CHECK(TransitionEffort(a, n) == 3);
  CHECK(TransitionEffort(n, n) == 0);
  CHECK(TransitionEffort(VsVector(), n) == n.Count());
  CHECK(WordEffort(VsSequence{}) == 0);
  CHECK(WordEffort(VsSequence{n}) == 3);
  CHECK(WordEffort(VsSequence{n, a}) == 6);
  auto h = EffortHistogram(VsSequence{n, a, a});
  CHECK(h == std::map<int, int>{{0, 1}, {3, 2}});
}

TEST_CASE("bundled table has the basis anchors") {
  const VsTable &t = VsTable::Bundled();
  CHECK(t.Vector("k").ToString() == "0000010010");
  CHECK(t.Vector("g").ToString() == "1000010010");
  CHECK(t.Vector("n").ToString() == "1000010001");
  CHECK(t.Vector("dh").ToString() == "1000010110");
  CHECK(t.Vector("oo").ToString() == "0110000000");
  CHECK(t.Vector("u_pull").ToString() == "0101000000");
  CHECK_FALSE(t.Lookup("k").curated);
  CHECK_THROWS_AS(t.Vector("no_such_symbol"), Error);
  CHECK(t.HasPhone("NG"));
  CHECK_FALSE(t.HasPhone("QQ"));
  // Every ARPABET phone maps somewhere.
  for (const char *p : {"AA", "AE", "AH", "AO", "AW", "AY", "B",  "CH", "D",  "DH",
                        "EH", "ER", "EY", "F",  "G",  "HH", "IH", "IY", "JH", "K",
                        "L",  "M",  "N",  "NG", "OW", "OY", "P",  "R",  "S",  "SH",
                        "T",  "TH", "UH", "UW", "V",  "W",  "Y",  "Z",  "ZH"})
    CHECK_MESSAGE(!t.PhoneSymbols(p).empty(), p);
}

TEST_CASE("naturalization decomposes into the reference rows") {
  const LexEntry &e = Lexicon::BundledCandidates().Find("naturalization");
  VsSequence seq = ArpabetToVs(e, VsTable::Bundled());
  const std::vector<std::string> expected{
      "1000010001", "1001000000", "1000010100", "0110000000", "1000010000",
      "1010000000", "1000001000", "1010000000", "1000010000", "0000010100",
      "1001000000", "0000010100", "1010000000", "1000010001"};
  REQUIRE(seq.size() == expected.size());
  for (std::size_t i = 0; i < seq.size(); ++i) CHECK(seq[i].ToString() == expected[i]);
  CHECK(WordEffort(seq) == 43);
  CHECK(EffortHistogram(seq) == std::map<int, int>{{2, 5}, {3, 4}, {4, 4}, {5, 1}});
  // Per-row efforts, Rest hop first.
  const std::vector<int> row_effort{3, 3, 3, 5, 4, 2, 2, 2, 2, 2, 4, 4, 4, 3};
  VsVector prev;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    CHECK(TransitionEffort(prev, seq[i]) == row_effort[i]);
    prev = seq[i];
  }
}

TEST_CASE("table parsing and validation") {
  const char *minimal = R"(# comment
symbol a 1000000000 reference  first
symbol b 0100000000 curated
phone AA a
phone AE a b
)";
  VsTable t = VsTable::Parse(minimal, "mini", VsTable::Validation::kNone);
  CHECK(t.Vector("b").ToString() == "0100000000");
  CHECK(t.Lookup("b").curated);
  CHECK(t.PhoneSymbols("AE") == std::vector<std::string>{"a", "b"});
  // The strict check wants the reference anchors.
  CHECK_THROWS_AS(VsTable::Parse(minimal, "mini"), Error);
  CHECK_THROWS_AS(VsTable::Parse("phone AA zz\n", "x", VsTable::Validation::kNone), Error);
  CHECK_THROWS_AS(VsTable::Parse("symbol a 1000000000 curated\nsymbol a 1000000000 curated\n", "x",
                                 VsTable::Validation::kNone),
                  Error);
  CHECK_THROWS_AS(VsTable::Parse("vector a 1\n", "x", VsTable::Validation::kNone), Error);
}
