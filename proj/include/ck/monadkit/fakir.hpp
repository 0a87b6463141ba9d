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

#include <map>
#include <string>
#include <vector>

#include "ck/kan/codensity.hpp"
#include "ck/monadkit/monad.hpp"

namespace ck {

// Pointwise equalizer of T(eta) and eta_T on each window size.
struct FakirValue {
  std::string monad;
  std::vector<int> window;
  std::map<int, std::vector<int>> subset;  // sorted ids of M(x)
  bool unit_lands = true;   // eta_x factors through the subset
  bool invariant = true;    // T(h) restricts for every h in the window
  std::vector<std::string> violations;
};

FakirValue fakir(const Monad& M, const std::vector<int>& window);

// The restriction of (T, eta) to the subsets, as a coaugmented functor on
// skeletal finite sets.
CoaugmentedEndofunctor fakir_coaugmented(const Monad& M, const FakirValue& F,
                                         const ConcreteCategory& finset);

struct FakirCodensityRung {
  int bound = 0;
  std::vector<int> D;           // A(M) below the bound
  int codensity_size = 0;       // |T_D(c)|
  uint64_t comparisons = 0;     // coaugmented maps from the fakir functor to T_D
  bool bijective = false;       // some comparison is bijective at c
};
struct FakirCodensityReport {
  int c = 0;
  int fakir_size = 0;
  std::vector<int> A;
  std::vector<FakirCodensityRung> rungs;
  int stable_from = -1;  // first bound after which |T_D(c)| no longer changes
  bool matches = false;  // the stable value is bijective with the fakir value
};
// A(M) is searched on 0..max(ladder); both functors live on the window 0..cmax.
FakirCodensityReport fakir_vs_codensity(const Monad& M, int c, const std::vector<int>& ladder,
                                        int cmax);

// Natural transformations Id => T on the window, and those satisfying the
// monad morphism axioms lambda = eta and mu . T(lambda) . lambda = lambda.
struct IdentityMorphisms {
  std::vector<std::vector<Fn>> naturals;  // per window object
  std::vector<size_t> morphisms;          // indices into naturals
  bool is_unit(size_t k, const Monad& M, const std::vector<int>& window) const;
};
IdentityMorphisms monad_morphisms_from_identity(const Monad& M, const std::vector<int>& window);

}  // namespace ck
