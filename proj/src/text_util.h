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

// Small helpers shared by the file parsers. Not installed.

#ifndef DYSINTEL_SRC_TEXT_UTIL_H_
#define DYSINTEL_SRC_TEXT_UTIL_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace dysintel::internal {

// Whole file as a string; throws Error(kIo).
std::string ReadFile(const std::filesystem::path &path);
// Writes atomically enough for our purposes; throws Error(kIo).
void WriteFile(const std::filesystem::path &path, std::string_view contents);

std::string_view Trim(std::string_view s);
std::vector<std::string_view> SplitWhitespace(std::string_view s);
std::vector<std::string_view> SplitChar(std::string_view s, char sep);
std::string ToLower(std::string_view s);

// Lines with 1-based numbers; blank lines and '#' comments skipped.
struct Line {
  int number = 0;
  std::string_view text;
};
std::vector<Line> ContentLines(std::string_view text);

// Throw Error(kParse) with "<origin>:<line>: " prefixed.
[[noreturn]] void ParseFailure(std::string_view origin, int line,
                               const std::string &message);
double ParseDouble(std::string_view s, std::string_view origin, int line);
long ParseInt(std::string_view s, std::string_view origin, int line);

// "%.6f", the fixed serialization precision of every report.
std::string FormatFixed(double v);

}  // namespace dysintel::internal

#endif  // DYSINTEL_SRC_TEXT_UTIL_H_
