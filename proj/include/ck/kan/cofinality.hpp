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

#include "ck/fincat/category.hpp"

namespace ck {

struct InitialityReport {
  bool initial = false;
  std::vector<int> comma_objects;  // per object d of the codomain
  std::vector<int> components;     // connected components of (F | d)
  std::vector<std::string> failures;
};

// 1-categorical initial-functor criterion: every (F | d) is nonempty and connected.
InitialityReport is_initial_functor(const FinFunctor& F);

// Windowed witness. Phi: C -> C' and Psi: D -> D' land in larger windows and
// Fbig: C' -> D' extends F. sigma: Const(c0) => Phi, xi: incl => Phi,
// tau: Const(F c0) => Psi, zeta: incl => Psi are given by components into C'
// and D'. The inclusions C -> C' and D -> D' are part of the data.
struct CofinalityWitness {
  FinFunctor F;
  FinFunctor Fbig;
  FinFunctor incC;
  FinFunctor incD;
  FinFunctor Phi;
  FinFunctor Psi;
  Id c0 = 0;
  std::vector<Id> sigma;
  std::vector<Id> xi;
  std::vector<Id> tau;
  std::vector<Id> zeta;
};

struct WitnessReport {
  bool ok = false;  // hypotheses hold
  std::vector<std::string> failures;
  InitialityReport conclusion;
};

WitnessReport cofinality_witness_check(const CofinalityWitness& w);

}  // namespace ck
