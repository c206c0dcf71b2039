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

#include "dysintel/errors.h"

namespace dysintel {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kInvalidArgument: return "invalid-argument";
    case ErrorKind::kInvalidGroundTruth: return "invalid-ground-truth";
    case ErrorKind::kNoData: return "no-data";
    case ErrorKind::kDimensionMismatch: return "dimension-mismatch";
    case ErrorKind::kUnknownSymbol: return "unknown-symbol";
    case ErrorKind::kUnknownWord: return "unknown-word";
    case ErrorKind::kUnknownSpeaker: return "unknown-speaker";
    case ErrorKind::kDuplicateKey: return "duplicate-key";
    case ErrorKind::kUndefinedCorrelation: return "undefined-correlation";
    case ErrorKind::kMissingData: return "missing-data";
    case ErrorKind::kRefused: return "refused";
    case ErrorKind::kIo: return "io";
    case ErrorKind::kValidation: return "validation";
  }
  return "unknown";
}

}  // namespace dysintel
