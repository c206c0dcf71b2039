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

#include "dysintel/phonetics.h"

#include <algorithm>
#include <array>
#include <cmath>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "bundled_data.h"
#include "dysintel/errors.h"
#include "text_util.h"

namespace dysintel {

namespace {

constexpr std::array<std::string_view, 15> kVowels = {
    "AA", "AE", "AH", "AO", "AW", "AY", "EH", "ER",
    "EY", "IH", "IY", "OW", "OY", "UH", "UW"};

constexpr std::array<std::string_view, 24> kConsonants = {
    "B", "CH", "D",  "DH", "F", "G", "HH", "JH", "K", "L", "M",  "N",
    "NG", "P", "R", "S",  "SH", "T", "TH", "V",  "W", "Y", "Z", "ZH"};

std::string StripStress(std::string_view phone) {
  std::string out;
  for (char c : phone) {
    if (c >= '0' && c <= '9') continue;
    out += (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A') : c;
  }
  return out;
}

}  // namespace

bool IsArpabetVowel(std::string_view phone) {
  return std::find(kVowels.begin(), kVowels.end(), phone) != kVowels.end();
}

bool IsArpabetPhone(std::string_view phone) {
  return IsArpabetVowel(phone) ||
         std::find(kConsonants.begin(), kConsonants.end(), phone) !=
             kConsonants.end();
}

LexEntry MakeLexEntry(std::string_view word,
                      std::span<const std::string_view> phones) {
  LexEntry e;
  e.word = internal::ToLower(word);
  if (e.word.empty()) throw Error(ErrorKind::kParse, "empty lexicon word");
  if (phones.empty())
    throw Error(ErrorKind::kParse,
                fmt::format("word '{}' has no phones", e.word));
  for (std::string_view p : phones) {
    std::string phone = StripStress(p);
    if (!IsArpabetPhone(phone))
      throw Error(ErrorKind::kParse,
                  fmt::format("word '{}': '{}' is not an ARPABET phone", e.word, p));
    e.phones.push_back(std::move(phone));
  }
  return e;
}

LexEntry MakeLexEntry(std::string_view word, std::string_view phones) {
  auto fields = internal::SplitWhitespace(phones);
  return MakeLexEntry(word, fields);
}

Lexicon Lexicon::Parse(std::string_view text, std::string_view origin) {
  Lexicon lex;
  for (const internal::Line &line : internal::ContentLines(text)) {
    if (line.text.starts_with(";;;")) continue;
    auto fields = internal::SplitWhitespace(line.text);
    if (fields.size() < 2)
      internal::ParseFailure(origin, line.number, "expected: <word> <phone>...");
    if (fields[0].find('(') != std::string_view::npos) continue;
    try {
      lex.Add(MakeLexEntry(fields[0],
                           std::span(fields).subspan(1)));
    } catch (const Error &e) {
      if (e.kind() == ErrorKind::kParse)
        internal::ParseFailure(origin, line.number, e.what());
      throw Error(e.kind(), fmt::format("{}:{}: {}", origin, line.number, e.what()));
    }
  }
  return lex;
}

Lexicon Lexicon::LoadFile(const std::filesystem::path &path) {
  return Parse(internal::ReadFile(path), path.string());
}

const Lexicon &Lexicon::BundledCandidates() {
  static const Lexicon lex =
      Parse(internal::BundledCandidateLexicon(), "<bundled candidates.dict>");
  return lex;
}

void Lexicon::Add(LexEntry entry) {
  auto it = entries_.find(entry.word);
  if (it != entries_.end()) {
    if (it->second.phones != entry.phones)
      throw Error(ErrorKind::kDuplicateKey,
                  fmt::format("conflicting pronunciations for '{}'", entry.word));
    return;
  }
  std::string key = entry.word;
  entries_.emplace(std::move(key), std::move(entry));
}

bool Lexicon::Contains(std::string_view word) const {
  return entries_.find(word) != entries_.end();
}

const LexEntry &Lexicon::Find(std::string_view word) const {
  auto it = entries_.find(word);
  if (it == entries_.end())
    throw Error(ErrorKind::kUnknownWord,
                fmt::format("word '{}' is not in the lexicon", word));
  return it->second;
}

FormantTable FormantTable::Parse(std::string_view text, std::string_view origin) {
  FormantTable table;
  for (const internal::Line &line : internal::ContentLines(text)) {
    auto fields = internal::SplitWhitespace(line.text);
    if (fields[0] == "vowel" && fields.size() == 4) {
      FormantPoint p{internal::ParseDouble(fields[2], origin, line.number),
                     internal::ParseDouble(fields[3], origin, line.number)};
      if (p.f1 < 0 || p.f2 < 0)
        internal::ParseFailure(origin, line.number, "negative formant");
      if (!table.vowels_.emplace(std::string(fields[1]), p).second)
        internal::ParseFailure(origin, line.number,
                               fmt::format("duplicate vowel '{}'", fields[1]));
    } else if (fields[0] == "split" && fields.size() >= 3) {
      table.splits_[std::string(fields[1])] =
          std::vector<std::string>(fields.begin() + 2, fields.end());
    } else {
      internal::ParseFailure(origin, line.number,
                             "expected 'vowel <V> <F1> <F2>' or 'split <V> <V>...'");
    }
  }
  for (const auto &[vowel, parts] : table.splits_) {
    for (const std::string &p : parts)
      if (!table.vowels_.contains(p))
        throw Error(ErrorKind::kParse,
                    fmt::format("{}: split of {} uses unknown vowel {}", origin,
                                vowel, p));
  }
  return table;
}

FormantTable FormantTable::LoadFile(const std::filesystem::path &path) {
  return Parse(internal::ReadFile(path), path.string());
}

const FormantTable &FormantTable::Bundled() {
  static const FormantTable table =
      Parse(internal::BundledFormants(), "<bundled formants.txt>");
  return table;
}

FormantPoint FormantTable::Lookup(std::string_view vowel) const {
  auto it = vowels_.find(vowel);
  if (it == vowels_.end())
    throw Error(ErrorKind::kUnknownSymbol,
                fmt::format("no formant entry for '{}'", vowel));
  return it->second;
}

std::vector<FormantPoint> FormantTable::Points(std::string_view vowel) const {
  if (auto it = vowels_.find(vowel); it != vowels_.end()) return {it->second};
  if (auto it = splits_.find(vowel); it != splits_.end()) {
    std::vector<FormantPoint> out;
    for (const std::string &p : it->second) out.push_back(Lookup(p));
    return out;
  }
  throw Error(ErrorKind::kUnknownSymbol,
              fmt::format("vowel '{}' has no formants and no split rule", vowel));
}

int SyllableCount(const LexEntry &entry) {
  return static_cast<int>(std::count_if(entry.phones.begin(), entry.phones.end(),
                                        [](const std::string &p) {
                                          return IsArpabetVowel(p);
                                        }));
}

int SpellingSyllableCount(std::string_view word) {
  auto is_vowel = [](char c) {
    c = static_cast<char>(c | 0x20);
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
  };
  int groups = 0;
  bool in_group = false;
  for (char c : word) {
    bool v = is_vowel(c);
    if (v && !in_group) ++groups;
    in_group = v;
  }
  return groups;
}

SyllableRule ParseSyllableRule(std::string_view name) {
  if (name == "spelling") return SyllableRule::kSpelling;
  if (name == "phones") return SyllableRule::kPhoneNuclei;
  throw Error(ErrorKind::kInvalidArgument,
              fmt::format("unknown syllable rule '{}'", name));
}

std::vector<TraversalLeg> TraversalPath(const LexEntry &entry,
                                        const FormantTable &formants) {
  std::vector<TraversalLeg> legs;
  FormantPoint at;  // Rest
  for (const std::string &phone : entry.phones) {
    if (!IsArpabetVowel(phone)) continue;
    for (FormantPoint p : formants.Points(phone)) {
      legs.push_back({phone, at, p, std::hypot(p.f1 - at.f1, p.f2 - at.f2)});
      at = p;
    }
  }
  if (legs.empty())
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("word '{}' has no vowels", entry.word));
  return legs;
}

double VowelTraversal(const LexEntry &entry, const FormantTable &formants) {
  double total = 0.0;
  for (const TraversalLeg &leg : TraversalPath(entry, formants))
    total += leg.distance;
  return total;
}

VsSequence ArpabetToVs(const LexEntry &entry, const VsTable &table) {
  VsSequence seq;
  for (const std::string &phone : entry.phones) {
    if (!table.HasPhone(phone))
      throw Error(ErrorKind::kUnknownSymbol,
                  fmt::format("word '{}': phone '{}' has no VS mapping",
                              entry.word, phone));
    for (const std::string &sym : table.PhoneSymbols(phone))
      seq.push_back(table.Vector(sym));
  }
  return seq;
}

int WordEffortOf(const LexEntry &entry, const VsTable &table) {
  return WordEffort(ArpabetToVs(entry, table));
}

std::vector<CandidateRow> EvaluateCandidates(const Lexicon &lexicon,
                                             const FormantTable &formants,
                                             const FilterOptions &options) {
  std::vector<CandidateRow> rows;
  for (const auto &[word, entry] : lexicon.entries()) {
    CandidateRow row;
    row.word = word;
    row.syllables = options.rule == SyllableRule::kSpelling
                        ? SpellingSyllableCount(word)
                        : SyllableCount(entry);
    if (SyllableCount(entry) > 0) row.traversal = VowelTraversal(entry, formants);
    row.passes_syllables = row.syllables >= options.min_syllables;
    row.passes_traversal = row.traversal > options.min_traversal;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::string> FilterCandidates(const Lexicon &lexicon,
                                          const FormantTable &formants,
                                          const FilterOptions &options) {
  std::vector<std::string> out;
  for (const CandidateRow &row : EvaluateCandidates(lexicon, formants, options))
    if (row.selected()) out.push_back(row.word);
  return out;
}

}  // namespace dysintel
