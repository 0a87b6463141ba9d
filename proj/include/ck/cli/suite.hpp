/*
 * Copyright 2026 The ck Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>
#include <vector>

namespace ck {

// One acceptance criterion with its thresholds pinned in suite.cpp. `seconds`
// is kept out of reports so that they stay byte-identical between runs.
struct CriterionResult {
  int id = 0;
  std::string title;
  std::string anchor;  // verbatim quote of the claim being shadowed
  std::string stamp;
  bool pass = false;
  std::vector<std::string> details;
  std::vector<std::string> counterexamples;
  double seconds = 0;
};

constexpr int kCriteria = 17;

// "paper" lists 1..17, "quick" the subset that fits the quick budget.
// Throws std::invalid_argument for any other name.
std::vector<int> suite_criteria(const std::string& suite);
CriterionResult run_criterion(int id);

}  // namespace ck
