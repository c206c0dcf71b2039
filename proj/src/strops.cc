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

#include "dysintel/strops.h"

#include <algorithm>
#include <iterator>

#include "dysintel/errors.h"

namespace dysintel {

Token ParseToken(std::string_view text) {
  if (text.size() == 1) {
    char c = text[0];
    if (c >= 'a' && c <= 'z') return Letter(c);
    if (c == '_') return Token::kSpace;
    if (c == '\'') return Token::kApostrophe;
  } else if (text == "<unk>") {
    return Token::kUnk;
  }
  throw Error(ErrorKind::kParse,
              "invalid token '" + std::string(text) + "'");
}

std::string TokenText(Token t) {
  if (IsLetter(t)) return std::string(1, static_cast<char>('a' + static_cast<int>(t)));
  switch (t) {
    case Token::kSpace: return "_";
    case Token::kApostrophe: return "'";
    case Token::kUnk: return "<unk>";
  }
  return "?";
}

namespace {

bool IsBlank(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

}  // namespace

CharSeq ParseCharSeq(std::string_view text) {
  CharSeq out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsBlank(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !IsBlank(text[j])) ++j;
    if (j > i) out.push_back(ParseToken(text.substr(i, j - i)));
    i = j;
  }
  return out;
}

std::string FormatCharSeq(std::span<const Token> s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += TokenText(s[i]);
  }
  return out;
}

CharSeq SpellWord(std::string_view word) {
  CharSeq out;
  out.reserve(word.size());
  for (char c : word) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    if (c >= 'a' && c <= 'z') {
      out.push_back(Letter(c));
    } else if (c == '\'') {
      out.push_back(Token::kApostrophe);
    } else {
      throw Error(ErrorKind::kParse,
                  "word '" + std::string(word) + "' has a non-letter character");
    }
  }
  return out;
}

std::string RenderCharSeq(std::span<const Token> s) {
  std::string out;
  for (Token t : s) out += t == Token::kSpace ? std::string(" ") : TokenText(t);
  return out;
}

std::size_t CountPattern(std::span<const Token> s, Token p) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), p));
}

CharSeq Squeeze(std::span<const Token> s) {
  CharSeq out;
  std::unique_copy(s.begin(), s.end(), std::back_inserter(out));
  return out;
}

CharSeq Delete(std::span<const Token> s, Token p) {
  CharSeq out;
  out.reserve(s.size());
  std::copy_if(s.begin(), s.end(), std::back_inserter(out),
               [p](Token t) { return t != p; });
  return out;
}

}  // namespace dysintel
