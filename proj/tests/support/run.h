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

// Runs the command-line tool in a subshell and captures its output.

#ifndef DYSINTEL_TESTS_SUPPORT_RUN_H_
#define DYSINTEL_TESTS_SUPPORT_RUN_H_

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace dysintel::testing {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

// `args` is appended verbatim to the binary path; `env` is a prefix such as
// "DYSINTEL_VS_TABLE=x ".
inline RunResult RunTool(const std::string &binary, const std::string &args,
                         const std::string &env = "") {
  static int counter = 0;
  const auto err_path = std::filesystem::temp_directory_path() /
                        ("dysintel_stderr_" + std::to_string(::getpid()) + "_" +
                         std::to_string(counter++));
  const std::string cmd = env + "'" + binary + "' " + args + " 2>'" + err_path.string() + "'";
  RunResult r;
  FILE *pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(err_path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  r.err = ss.str();
  std::filesystem::remove(err_path);
  return r;
}

}  // namespace dysintel::testing

#endif  // DYSINTEL_TESTS_SUPPORT_RUN_H_
