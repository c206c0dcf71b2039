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

// Writes the fixture corpus used by the end-to-end tests.
//
//   make_fixture tests/fixtures/corpus

#include <filesystem>
#include <fstream>
#include <iostream>

#include "synthetic.h"

int main(int argc, char **argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixture <output-dir>\n";
    return 64;
  }
  std::filesystem::path dir(argv[1]);
  std::filesystem::create_directories(dir);
  auto text = dysintel::testing::MakeSyntheticCorpus(dysintel::testing::FixtureConfig());
  auto put = [&](const char *name, const std::string &contents) {
    std::ofstream(dir / name, std::ios::binary) << contents;
  };
  put("transcripts.txt", text.transcripts);
  put("lexicon.dict", text.lexicon);
  put("perceptual.csv", *text.perceptual);
  put("features.csv", *text.features);
  return 0;
}
