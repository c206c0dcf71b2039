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

#include "dysintel/visible_speech.h"

#include <array>
#include <utility>

#include <fmt/format.h>

#include "bundled_data.h"
#include "dysintel/errors.h"
#include "text_util.h"

namespace dysintel {

VsVector VsVector::Parse(std::string_view bits) {
  if (bits.size() != kNumRadicals)
    throw Error(ErrorKind::kParse,
                fmt::format("VS vector '{}' must have {} bits", bits, kNumRadicals));
  std::bitset<kNumRadicals> b;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      b.set(i);
    } else if (bits[i] != '0') {
      throw Error(ErrorKind::kParse, fmt::format("bad VS vector '{}'", bits));
    }
  }
  return VsVector(b);
}

VsVector VsVector::FromList(std::initializer_list<int> bits) {
  if (bits.size() != kNumRadicals)
    throw Error(ErrorKind::kInvalidArgument, "VS vector needs 10 components");
  std::bitset<kNumRadicals> b;
  std::size_t i = 0;
  for (int v : bits) b.set(i++, v != 0);
  return VsVector(b);
}

std::string VsVector::ToString() const {
  std::string out(kNumRadicals, '0');
  for (std::size_t i = 0; i < kNumRadicals; ++i)
    if (bits_[i]) out[i] = '1';
  return out;
}

int TransitionEffort(VsVector from, VsVector to) { return (from ^ to).Count(); }

int WordEffort(std::span<const VsVector> seq) {
  int total = 0;
  VsVector prev;
  for (VsVector v : seq) {
    total += TransitionEffort(prev, v);
    prev = v;
  }
  return total;
}

std::map<int, int> EffortHistogram(std::span<const VsVector> seq) {
  std::map<int, int> hist;
  VsVector prev;
  for (VsVector v : seq) {
    ++hist[TransitionEffort(prev, v)];
    prev = v;
  }
  return hist;
}

namespace {

// Published basis examples: symbol id -> vector.
constexpr std::array<std::pair<std::string_view, std::string_view>, 6>
    kBasisExamples = {{
        {"k", "0000010010"},
        {"g", "1000010010"},
        {"n", "1000010001"},
        {"dh", "1000010110"},
        {"oo", "0110000000"},
        {"u_pull", "0101000000"},
    }};

// Published phone list of "naturalization" and its 14 sound vectors.
constexpr std::array<std::string_view, 12> kNaturalizationPhones = {
    "N", "AE", "CH", "ER", "AH", "L", "IH", "Z", "EY", "SH", "AH", "N"};
constexpr std::array<std::string_view, 14> kNaturalizationVectors = {
    "1000010001", "1001000000", "1000010100", "0110000000", "1000010000",
    "1010000000", "1000001000", "1010000000", "1000010000", "0000010100",
    "1001000000", "0000010100", "1010000000", "1000010001"};

}  // namespace

VsTable VsTable::Parse(std::string_view text, std::string_view origin,
                       Validation validation) {
  VsTable table;
  for (const internal::Line &line : internal::ContentLines(text)) {
    auto fields = internal::SplitWhitespace(line.text);
    if (fields[0] == "symbol") {
      if (fields.size() < 4)
        internal::ParseFailure(origin, line.number,
                               "expected: symbol <id> <bits> <reference|curated> ...");
      Symbol sym;
      try {
        sym.vector = VsVector::Parse(fields[2]);
      } catch (const Error &e) {
        internal::ParseFailure(origin, line.number, e.what());
      }
      if (fields[3] == "curated") {
        sym.curated = true;
      } else if (fields[3] != "reference") {
        internal::ParseFailure(origin, line.number,
                               fmt::format("unknown provenance '{}'", fields[3]));
      }
      for (std::size_t i = 4; i < fields.size(); ++i) {
        if (i > 4) sym.description += ' ';
        sym.description += fields[i];
      }
      auto [it, inserted] = table.symbols_.emplace(std::string(fields[1]), sym);
      if (!inserted)
        internal::ParseFailure(origin, line.number,
                               fmt::format("duplicate symbol '{}'", fields[1]));
    } else if (fields[0] == "phone") {
      if (fields.size() < 3)
        internal::ParseFailure(origin, line.number,
                               "expected: phone <ARPABET> <symbol>...");
      std::vector<std::string> syms(fields.begin() + 2, fields.end());
      for (const std::string &s : syms) {
        if (!table.symbols_.contains(s))
          internal::ParseFailure(origin, line.number,
                                 fmt::format("phone {} uses undefined symbol '{}'",
                                             fields[1], s));
      }
      auto [it, inserted] =
          table.phones_.emplace(std::string(fields[1]), std::move(syms));
      if (!inserted)
        internal::ParseFailure(origin, line.number,
                               fmt::format("duplicate phone '{}'", fields[1]));
    } else {
      internal::ParseFailure(origin, line.number,
                             fmt::format("unknown record '{}'", fields[0]));
    }
  }
  if (validation == Validation::kStrict) table.Validate();
  return table;
}

VsTable VsTable::LoadFile(const std::filesystem::path &path,
                          Validation validation) {
  return Parse(internal::ReadFile(path), path.string(), validation);
}

const VsTable &VsTable::Bundled() {
  static const VsTable table =
      Parse(internal::BundledVsBasis(), "<bundled vs_basis.txt>");
  return table;
}

void VsTable::Validate() const {
  for (auto [id, bits] : kBasisExamples) {
    auto it = symbols_.find(id);
    if (it == symbols_.end())
      throw Error(ErrorKind::kValidation,
                  fmt::format("reference symbol '{}' missing", id));
    if (it->second.vector != VsVector::Parse(bits))
      throw Error(ErrorKind::kValidation,
                  fmt::format("symbol '{}' is {}, reference is {}", id,
                              it->second.vector.ToString(), bits));
  }
  std::vector<VsVector> expanded;
  for (std::string_view phone : kNaturalizationPhones) {
    if (!HasPhone(phone))
      throw Error(ErrorKind::kValidation,
                  fmt::format("reference phone '{}' has no mapping", phone));
    for (const std::string &s : PhoneSymbols(phone))
      expanded.push_back(Vector(s));
  }
  if (expanded.size() != kNaturalizationVectors.size())
    throw Error(ErrorKind::kValidation,
                fmt::format("'naturalization' expands to {} sounds, reference has {}",
                            expanded.size(), kNaturalizationVectors.size()));
  for (std::size_t i = 0; i < expanded.size(); ++i) {
    if (expanded[i] != VsVector::Parse(kNaturalizationVectors[i]))
      throw Error(ErrorKind::kValidation,
                  fmt::format("'naturalization' sound {} is {}, reference is {}",
                              i + 1, expanded[i].ToString(),
                              kNaturalizationVectors[i]));
  }
}

const VsTable::Symbol &VsTable::Lookup(std::string_view symbol) const {
  auto it = symbols_.find(symbol);
  if (it == symbols_.end())
    throw Error(ErrorKind::kUnknownSymbol,
                fmt::format("unknown VS symbol '{}'", symbol));
  return it->second;
}

VsVector VsTable::Vector(std::string_view symbol) const {
  return Lookup(symbol).vector;
}

const std::vector<std::string> &VsTable::PhoneSymbols(std::string_view phone) const {
  auto it = phones_.find(phone);
  if (it == phones_.end())
    throw Error(ErrorKind::kUnknownSymbol,
                fmt::format("phone '{}' has no VS mapping", phone));
  return it->second;
}

bool VsTable::HasPhone(std::string_view phone) const {
  return phones_.find(phone) != phones_.end();
}

}  // namespace dysintel
