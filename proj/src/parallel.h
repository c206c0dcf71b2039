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

#ifndef DYSINTEL_SRC_PARALLEL_H_
#define DYSINTEL_SRC_PARALLEL_H_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace dysintel::internal {

// Runs fn(i) for i in [0, n) on up to `workers` threads, strided so each
// index is visited once. fn must only write state owned by index i. The
// exception of the lowest failing index is rethrown after all threads join.
template <typename Fn>
void ParallelFor(std::size_t n, unsigned workers, Fn fn) {
  std::vector<std::exception_ptr> errors(n);
  const std::size_t threads =
      std::min<std::size_t>(std::max(1u, workers), std::max<std::size_t>(n, 1));
  auto run = [&](std::size_t start) {
    for (std::size_t i = start; i < n; i += threads) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(run, t);
  }
  for (const std::exception_ptr &e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace dysintel::internal

#endif  // DYSINTEL_SRC_PARALLEL_H_
