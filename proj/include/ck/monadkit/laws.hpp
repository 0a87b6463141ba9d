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

#include "ck/monadkit/monad.hpp"

namespace ck {

struct LawReport {
  bool ok = true;
  std::vector<int> window;
  std::vector<std::string> violations;
  std::vector<std::string> notes;  // reductions and skipped checks
  uint64_t checks = 0;
  void fail(std::string msg);
};

// Functoriality, naturality of eta and mu, both unit laws and associativity
// on every size in the window. Associativity is exhaustive whenever T^3(x)
// can be enumerated; for term monads beyond that it is reduced to the label
// axioms and a sampled check, and the reduction is recorded in notes.
LawReport monad_law_check(const Monad& M, const std::vector<int>& window);

}  // namespace ck
