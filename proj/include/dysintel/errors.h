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

#ifndef DYSINTEL_ERRORS_H_
#define DYSINTEL_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace dysintel {

enum class ErrorKind {
  kParse,
  kInvalidArgument,
  kInvalidGroundTruth,
  kNoData,
  kDimensionMismatch,
  kUnknownSymbol,
  kUnknownWord,
  kUnknownSpeaker,
  kDuplicateKey,
  kUndefinedCorrelation,
  kMissingData,
  kRefused,
  kIo,
  kValidation,
};

// Stable, machine-parsable name for each kind ("parse", "no-data", ...).
std::string_view ErrorKindName(ErrorKind kind);

// The single exception type thrown by the library. The kind is what callers
// (and the CLI's exit path) switch on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dysintel

#endif  // DYSINTEL_ERRORS_H_
