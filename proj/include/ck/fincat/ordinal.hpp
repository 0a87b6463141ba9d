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
#include <utility>
#include <vector>

#include "ck/fincat/category.hpp"

namespace ck {

// Ordinals are stored by cardinality: size k is the ordinal [k-1], so 0 is [-1].
struct OrdMap {
  int dom = 0;
  int cod = 0;
  std::vector<int> v;  // v[i] in [0, cod), weakly increasing

  bool operator==(const OrdMap& o) const { return dom == o.dom && cod == o.cod && v == o.v; }
  bool operator<(const OrdMap& o) const;

  bool valid() const;
  bool is_max() const { return dom >= 1 && cod >= 1 && v.back() == cod - 1; }
  bool injective() const;
  bool surjective() const;
  bool is_identity() const;
  std::string str() const;  // e.g. "2>3:0,2"
};

std::string ordinal_name(int card);  // "[-1]", "[0]", ...

OrdMap ord_identity(int card);
OrdMap ord_compose(const OrdMap& g, const OrdMap& f);  // g o f
OrdMap ordinal_join(const OrdMap& a, const OrdMap& b);
OrdMap amax(int n);  // the map [n] -> [0], domain cardinality n + 1

// All monotone maps dom -> cod in lexicographic order.
std::vector<OrdMap> monotone_maps(int dom, int cod);
std::vector<OrdMap> monotone_injections(int dom, int cod);
std::vector<OrdMap> monotone_surjections(int dom, int cod);
std::vector<OrdMap> max_maps(int dom, int cod);
uint64_t count_monotone(int dom, int cod);

// g = f * amax(n) with n + 1 the size of the top fiber.
std::pair<OrdMap, int> max_canonical_form(const OrdMap& g);
OrdMap max_from_canonical(const OrdMap& f, int n);
// Composition computed with the canonical-form law; throws std::logic_error
// if it disagrees with pointwise composition.
OrdMap max_compose(const OrdMap& g2, const OrdMap& g1);

enum class SimplexKind { Plus, Delta, Max, PlusInj };

// Truncation of the requested simplex category to cardinalities lo..hi.
FinCategory simplex_category(SimplexKind kind, int lo, int hi);
std::vector<OrdMap> simplex_category_maps(const FinCategory& c);  // parse morphism names

// Cofaces delta^i: [n-1] -> [n] skipping i; codegeneracies sigma^j: [n+1] -> [n].
OrdMap coface(int n, int i);
OrdMap codegeneracy(int n, int j);

}  // namespace ck
