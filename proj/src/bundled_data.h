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

#ifndef DYSINTEL_SRC_BUNDLED_DATA_H_
#define DYSINTEL_SRC_BUNDLED_DATA_H_

#include <string_view>

namespace dysintel::internal {

// Contents of data/ compiled into the library.
std::string_view BundledVsBasis();
std::string_view BundledFormants();
std::string_view BundledCandidateLexicon();

}  // namespace dysintel::internal

#endif  // DYSINTEL_SRC_BUNDLED_DATA_H_
