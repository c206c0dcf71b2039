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

// Articulatory effort from Bell's Visible Speech. Every English sound is a
// 10-bit vector over the radical symbols; moving between two sounds costs
// the number of radicals that change (popcount of the XOR), and a word costs
// the sum of its transitions starting from the all-zero Rest state.

#ifndef DYSINTEL_VISIBLE_SPEECH_H_
#define DYSINTEL_VISIBLE_SPEECH_H_

#include <bitset>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dysintel {

// Basis order; also the character order of serialized bit strings.
enum class Radical {
  kVoice,
  kRoundedVoice,
  kVowelDefiner,
  kWideVowelDefiner,
  kWhisper,
  kMouthContracted,
  kMouthDivided,
  kMixer,
  kShutter,
  kNasal,
};

inline constexpr int kNumRadicals = 10;

class VsVector {
 public:
  VsVector() = default;  // Rest
  explicit VsVector(std::bitset<kNumRadicals> bits) : bits_(bits) {}

  // "0000010010"; throws kParse on anything else.
  static VsVector Parse(std::string_view bits);
  static VsVector FromList(std::initializer_list<int> bits);

  bool Has(Radical r) const { return bits_[static_cast<std::size_t>(r)]; }
  int Count() const { return static_cast<int>(bits_.count()); }
  bool IsRest() const { return bits_.none(); }
  std::string ToString() const;  // inverse of Parse

  friend VsVector operator^(VsVector a, VsVector b) {
    return VsVector(a.bits_ ^ b.bits_);
  }
  friend bool operator==(VsVector a, VsVector b) = default;

 private:
  std::bitset<kNumRadicals> bits_;
};

using VsSequence = std::vector<VsVector>;

// #(a XOR b), in [0, 10].
int TransitionEffort(VsVector from, VsVector to);

// Rest -> seq[0] -> ... -> seq[n-1]; 0 for an empty sequence.
int WordEffort(std::span<const VsVector> seq);

// Count of each transition effort value, the Rest transition included.
std::map<int, int> EffortHistogram(std::span<const VsVector> seq);

// Symbol inventory plus the ARPABET phone -> symbol expansion, loaded from
// the text format in data/vs_basis.txt. Immutable after construction.
class VsTable {
 public:
  enum class Validation { kStrict, kNone };

  struct Symbol {
    VsVector vector;
    bool curated = false;
    std::string description;
  };

  // Strict validation checks the reference rows (the six published basis
  // examples and the 14-sound decomposition of "naturalization") and throws
  // Error(kValidation) on any disagreement.
  static VsTable Parse(std::string_view text, std::string_view origin,
                       Validation validation = Validation::kStrict);
  static VsTable LoadFile(const std::filesystem::path &path,
                          Validation validation = Validation::kStrict);
  // The table compiled into the binary.
  static const VsTable &Bundled();

  // Throws Error(kUnknownSymbol).
  VsVector Vector(std::string_view symbol) const;
  const Symbol &Lookup(std::string_view symbol) const;
  // Throws Error(kUnknownSymbol) naming the phone.
  const std::vector<std::string> &PhoneSymbols(std::string_view phone) const;
  bool HasPhone(std::string_view phone) const;

  const std::map<std::string, Symbol, std::less<>> &symbols() const {
    return symbols_;
  }

 private:
  void Validate() const;

  std::map<std::string, Symbol, std::less<>> symbols_;
  std::map<std::string, std::vector<std::string>, std::less<>> phones_;
};

}  // namespace dysintel

#endif  // DYSINTEL_VISIBLE_SPEECH_H_
