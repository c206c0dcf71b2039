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

// String-operation algebra over the 29-token output alphabet of a CTC
// speech-to-alphabet engine: count C(s,p), length L(s), squeeze S(s) and
// delete D(s,p).
//
// Text encoding of a token stream: tokens are whitespace separated, letters
// are lowercase a-z, "_" is SPACE, "'" is APOSTROPHE and "<unk>" is UNK.
//
//   n a a _ t t t <unk> u u u _ r r r r <unk> e e <unk>

#ifndef DYSINTEL_STROPS_H_
#define DYSINTEL_STROPS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dysintel {

// Letters occupy 0..25 in alphabetical order.
enum class Token : std::uint8_t {
  kSpace = 26,
  kApostrophe = 27,
  kUnk = 28,
};

inline constexpr int kNumTokens = 29;

constexpr Token Letter(char c) { return static_cast<Token>(c - 'a'); }
constexpr bool IsLetter(Token t) { return static_cast<std::uint8_t>(t) < 26; }

using CharSeq = std::vector<Token>;

// Token <-> text. ParseToken throws Error(kParse) on anything outside the
// encoding above.
Token ParseToken(std::string_view text);
std::string TokenText(Token t);

// Parses a whitespace-separated token stream ("n a _ t <unk>").
CharSeq ParseCharSeq(std::string_view text);
// Inverse of ParseCharSeq; tokens joined by single spaces.
std::string FormatCharSeq(std::span<const Token> s);

// Spelled form of a word ("nature"). Accepts a-z (case-folded) and
// apostrophes only.
CharSeq SpellWord(std::string_view word);
// Concatenated rendering: letters and "'" verbatim, SPACE as ' ', UNK as
// "<unk>". Not invertible when UNK is present; use FormatCharSeq for I/O.
std::string RenderCharSeq(std::span<const Token> s);

std::size_t CountPattern(std::span<const Token> s, Token p);
inline std::size_t Length(std::span<const Token> s) { return s.size(); }
// Collapses each maximal run of identical adjacent tokens to one token.
CharSeq Squeeze(std::span<const Token> s);
// Removes every occurrence of p.
CharSeq Delete(std::span<const Token> s, Token p);

}  // namespace dysintel

#endif  // DYSINTEL_STROPS_H_
