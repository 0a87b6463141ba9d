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

#include "ck/bkshadow/ring.hpp"
#include "ck/monadkit/algebra.hpp"
#include "ck/simplex/sset.hpp"

namespace ck {

// Finite-set shadow of the R-completion: which cardinalities carry an
// R_a-algebra, sandwiched between the image objects and their retracts.
struct ShadowReport {
  std::string ring;
  std::vector<int> window;
  std::vector<uint64_t> sizes;  // |R_a(x)| for x in the window
  IsarReport isar;
  std::vector<int> spectrum;  // A(R_a) within the window
  bool empty_admitted = false;
  bool sandwich = false;  // I within A within R
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
ShadowReport kR_shadow(const FiniteRing& R, const std::vector<int>& window);

// R_a applied levelwise; faces and degeneracies act on supports.
TruncatedSSet levelwise_affine(const TruncatedSSet& X, const FiniteRing& R);

}  // namespace ck
