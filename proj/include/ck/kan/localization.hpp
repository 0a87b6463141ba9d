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

#include <optional>
#include <string>
#include <vector>

#include "ck/fincat/category.hpp"

namespace ck {

struct Localization {
  FinFunctor L;  // C -> C, image inside D
  NatTransf eta;  // Id => L
  std::vector<Id> counit;  // counit[i]: L(D[i]) -> D[i]
  bool triangles_ok = false;
  bool eta_initial = false;  // eta_c is initial in D_{c/} for every c
  bool limit_ok = false;     // lim(D_{c/} -> C) exists and is isomorphic to L(c)
  std::vector<std::string> notes;
};

// Left adjoint to the inclusion of the full subcategory D, found by exhaustive
// search over unit candidates c -> d. Returns none when some object has no
// universal arrow into D.
std::optional<Localization> reflector_and_localization(const CatPtr& C, const std::vector<Id>& D);

}  // namespace ck
