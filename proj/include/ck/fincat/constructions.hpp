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
#include <vector>

#include "ck/fincat/category.hpp"

namespace ck {

// D_{c/}: objects are morphisms c -> d with d in D, morphisms h: d -> d' with
// h o f = f'. The projection sends (c -> d) to d.
struct CommaResult {
  CatPtr cat;
  FinFunctor projection;
  std::vector<Id> object_morphism;  // comma object -> underlying morphism of C
  std::vector<Id> morphism_of;      // comma morphism -> underlying morphism of C
};
CommaResult comma_under(const CatPtr& C, const std::vector<Id>& D, Id c);

// Tw(C): objects are morphisms of C; alpha -> alpha' is a pair (g0, g1) with
// alpha = g1 o alpha' o g0. p = source projection to C, q = target projection to C^op.
struct TwistedArrow {
  CatPtr tw;
  CatPtr op;
  FinFunctor p;
  FinFunctor q;
  std::vector<std::pair<Id, Id>> pairs;  // morphism -> (g0, g1)
};
TwistedArrow twisted_arrow(const CatPtr& C);

// C_{/c}: objects alpha: a -> c, morphisms h with alpha' o h = alpha.
struct SliceResult {
  CatPtr cat;
  std::vector<Id> object_morphism;
  std::vector<Id> morphism_of;
};
SliceResult slice_over(const CatPtr& C, Id c);

// C_{|c}: the fiber of q over c inside Tw(C), i.e. objects with target c and
// morphisms (g0, id_c). Also returns the comparison functor C_{/c} -> C_{|c}.
struct OverFiber {
  CatPtr fiber;
  std::vector<std::pair<Id, Id>> pairs;
  SliceResult slice;
  FinFunctor comparison;
  bool comparison_bijective = false;
};
OverFiber over_fiber(const CatPtr& C, Id c);

}  // namespace ck
