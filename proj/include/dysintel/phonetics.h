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

// Pronunciation lexicon, F1-F2 vowel-space traversal, syllable counts, the
// ARPABET -> Visible Speech expansion and the candidate-word filter.

#ifndef DYSINTEL_PHONETICS_H_
#define DYSINTEL_PHONETICS_H_

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dysintel/visible_speech.h"

namespace dysintel {

// 39-phone ARPABET set, stress digits already removed.
bool IsArpabetPhone(std::string_view phone);
bool IsArpabetVowel(std::string_view phone);

struct LexEntry {
  std::string word;                 // lowercase
  std::vector<std::string> phones;  // nonempty, validated ARPABET
};

// Lowercases the word, strips stress digits and validates every phone.
// Throws Error(kParse) on an empty or invalid transcription.
LexEntry MakeLexEntry(std::string_view word,
                      std::span<const std::string_view> phones);
LexEntry MakeLexEntry(std::string_view word, std::string_view phones);

// word -> one canonical pronunciation. Text format: "<word> <phone>...",
// '#' and ';;;' comments, CMUdict alternates ("word(2)") ignored.
class Lexicon {
 public:
  Lexicon() = default;

  static Lexicon Parse(std::string_view text, std::string_view origin);
  static Lexicon LoadFile(const std::filesystem::path &path);
  // The 14-word candidate lexicon shipped in data/candidates.dict.
  static const Lexicon &BundledCandidates();

  // Identical re-insertions are accepted; a conflicting one throws
  // Error(kDuplicateKey).
  void Add(LexEntry entry);

  bool Contains(std::string_view word) const;
  // Throws Error(kUnknownWord).
  const LexEntry &Find(std::string_view word) const;
  const std::map<std::string, LexEntry, std::less<>> &entries() const {
    return entries_;
  }
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, LexEntry, std::less<>> entries_;
};

struct FormantPoint {
  double f1 = 0.0;
  double f2 = 0.0;
};

class FormantTable {
 public:
  static FormantTable Parse(std::string_view text, std::string_view origin);
  static FormantTable LoadFile(const std::filesystem::path &path);
  static const FormantTable &Bundled();

  // Direct table entry; throws Error(kUnknownSymbol) otherwise.
  FormantPoint Lookup(std::string_view vowel) const;
  // Traversal points of a vowel: one for a monophthong, two for a split
  // diphthong. Throws Error(kUnknownSymbol) for a vowel with neither.
  std::vector<FormantPoint> Points(std::string_view vowel) const;

 private:
  std::map<std::string, FormantPoint, std::less<>> vowels_;
  std::map<std::string, std::vector<std::string>, std::less<>> splits_;
};

// Number of vowel-nucleus phones. 0 for an all-consonant transcription.
int SyllableCount(const LexEntry &entry);
// Number of maximal runs of vowel letters (a, e, i, o, u, y) in the spelling.
int SpellingSyllableCount(std::string_view word);

enum class SyllableRule { kSpelling, kPhoneNuclei };
SyllableRule ParseSyllableRule(std::string_view name);  // "spelling"|"phones"

struct TraversalLeg {
  std::string vowel;
  FormantPoint from;
  FormantPoint to;
  double distance = 0.0;
};

// Path Rest(0,0) -> v1 -> v2 -> ... over the word's vowels. Throws
// Error(kInvalidArgument) for a word without vowels.
std::vector<TraversalLeg> TraversalPath(const LexEntry &entry,
                                        const FormantTable &formants);
double VowelTraversal(const LexEntry &entry, const FormantTable &formants);

// Concatenated VS vectors of every phone. Throws Error(kUnknownSymbol)
// naming the first unmapped phone.
VsSequence ArpabetToVs(const LexEntry &entry, const VsTable &table);

// E_word of a lexicon entry.
int WordEffortOf(const LexEntry &entry, const VsTable &table);

struct FilterOptions {
  int min_syllables = 5;         // keep syllables >= this
  double min_traversal = 2400.0; // keep traversal > this (Hz)
  SyllableRule rule = SyllableRule::kSpelling;
};

struct CandidateRow {
  std::string word;
  int syllables = 0;
  double traversal = 0.0;  // 0 when the word has no vowels
  bool passes_syllables = false;
  bool passes_traversal = false;
  bool selected() const { return passes_syllables && passes_traversal; }
};

// One row per lexicon word, sorted by word.
std::vector<CandidateRow> EvaluateCandidates(const Lexicon &lexicon,
                                             const FormantTable &formants,
                                             const FilterOptions &options = {});
// Words passing both criteria, sorted.
std::vector<std::string> FilterCandidates(const Lexicon &lexicon,
                                          const FormantTable &formants,
                                          const FilterOptions &options = {});

}  // namespace dysintel

#endif  // DYSINTEL_PHONETICS_H_
