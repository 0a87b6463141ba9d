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

#include "ck/simplex/sset.hpp"

namespace ck {

// Horn inclusions tested per class: kan all i, inner 0<i<n, left i<n, right i>0.
enum class HornClass { Kan, Inner, Left, Right };
HornClass parse_horn_class(const std::string& s);
std::string horn_class_name(HornClass c);
bool horn_allowed(HornClass c, int n, int i);

struct HornTally {
  int n = 0;
  int i = 0;
  uint64_t instances = 0;
  uint64_t failures = 0;
};

// Right lifting of p: E -> B against Lambda^n_i -> Delta^n for 1 <= n <= max_dim.
// A result is evidence up to dimension max_dim, nothing more.
struct LiftingReport {
  bool ok = true;
  int max_dim = 0;
  HornClass cls = HornClass::Kan;
  uint64_t instances = 0;
  std::vector<HornTally> horns;
  std::vector<std::string> failures;  // first few witnesses
  std::string stamp() const;
};

LiftingReport horn_lifting_check(const SimplicialMap& p, HornClass cls, int max_dim);

// Maps Lambda^n_i -> X as compatible tuples of faces (x_j)_{j != i}.
std::vector<std::vector<int>> horn_tuples(const TruncatedSSet& X, int n, int i);

}  // namespace ck
