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

#include "ck/fincat/ordinal.hpp"
#include "ck/monadkit/algebra.hpp"
#include "ck/monadkit/programs.hpp"

namespace ck {

struct ProgramCheck {
  uint64_t checked = 0;
  uint64_t symbolic = 0;  // decided on generic elements
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// The cobar functor [k] -> T^{k+1} at x: phi(id) = id and phi(g o f) =
// phi(g) phi(f) for all composable monotone maps of cardinality <= levels + 1.
ProgramCheck cobar_check(const Monad& M, int x, int levels);

// psi(g) as a concrete map T^{g.dom - 1}(x) -> T^{g.cod - 1}(x).
Fn walking_action(const Monad& M, const AlgebraStructure& alg, const OrdMap& g);

// psi(id) = id and psi(g o g') = psi(g) psi(g') for every composable pair of
// max-preserving maps with cardinalities 1..max_card.
ProgramCheck walking_check(const Monad& M, const AlgebraStructure& alg, int max_card);

}  // namespace ck
