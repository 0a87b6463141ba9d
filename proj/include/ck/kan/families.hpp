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

#include <cstdint>
#include <functional>
#include <vector>

#include "ck/common.hpp"

namespace ck {

// Natural families over a finite diagram of sets. Block b has dom[b] variables,
// each taking a value below cod[b]. An arrow (s, t, fmap, gmap) imposes
//   x_t[fmap[e]] == gmap[x_s[e]]  for every e < dom[s].
struct FamilyProblem {
  struct Arrow {
    int src = 0;
    int tgt = 0;
    Fn fmap;
    Fn gmap;
  };
  std::vector<int> dom;
  std::vector<int> cod;
  std::vector<Arrow> arrows;
  struct Pin {
    int block;
    int var;
    int value;
  };
  std::vector<Pin> pins;

  int add_block(int d, int c) {
    dom.push_back(d);
    cod.push_back(c);
    return static_cast<int>(dom.size()) - 1;
  }
};

// Visits every solution in lexicographic order of the concatenated assignment
// (blocks in order, variables in order). The visitor returns false to stop.
// Throws ResourceError once the search exceeds guard_limit() nodes.
void solve_families(const FamilyProblem& p,
                    const std::function<bool(const std::vector<int>&)>& visit);

std::vector<std::vector<int>> all_families(const FamilyProblem& p);
uint64_t count_families(const FamilyProblem& p);

}  // namespace ck
