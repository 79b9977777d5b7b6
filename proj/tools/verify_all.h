// Copyright 2026 The qfold Authors
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

// The property suite behind `qfold verify-all`.
#ifndef QFOLD_TOOLS_VERIFY_ALL_H_
#define QFOLD_TOOLS_VERIFY_ALL_H_

#include <cstdint>
#include <string>
#include <vector>

#include "qfold/io.h"

namespace qfold {

struct CheckOutcome {
  std::string entry;
  std::string check;
  bool passed = false;
  bool skipped = false;
  std::string detail;
};

struct VerifyOptions {
  uint64_t seed = 0;
  int threads = 0;  // 0: hardware concurrency
  int trials = 20;  // random samples per randomized check
};

// One outcome per (entry, check), in corpus order then check order,
// independent of the thread count.
std::vector<CheckOutcome> VerifyAll(const std::vector<CorpusEntry>& corpus, const VerifyOptions& opts);

}  // namespace qfold

#endif  // QFOLD_TOOLS_VERIFY_ALL_H_
