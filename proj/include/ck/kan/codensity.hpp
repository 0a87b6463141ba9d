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
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ck/fincat/concrete.hpp"
#include "ck/kan/families.hpp"

namespace ck {

// T_D(c) as the set of naturality families. A family assigns to every d in D
// (position i) and f in hom(c, d) (position k) the value phi[offset[i] + k].
struct CodensityValue {
  std::string ambient;
  std::vector<int> D;
  int c = 0;
  std::vector<int> offset;  // size |D| + 1
  std::vector<Fn> elements;  // sorted lexicographically
  std::vector<int> unit;     // unit[x] = index of the evaluation family at x
  std::unordered_map<Fn, int, FnHash> index;

  int size() const { return static_cast<int>(elements.size()); }
  std::optional<int> find(const Fn& phi) const;
  bool unit_injective() const;
  bool unit_bijective() const;
};

// Naturality constraints for families on hom(c, -) restricted to D.
FamilyProblem codensity_problem(const ConcreteCategory& amb, const std::vector<int>& D, int c);

CodensityValue codensity_value(const ConcreteCategory& amb, const std::vector<int>& D, int c);

// Independent re-check of naturality for every stored family.
bool families_natural(const ConcreteCategory& amb, const CodensityValue& v);

// An endofunctor with coaugmentation, tabulated on a window of objects.
// fmap[i * n + j][k] realizes F(hom(window[i], window[j])[k]).
struct CoaugmentedEndofunctor {
  std::string name;
  const ConcreteCategory* ambient = nullptr;
  std::vector<int> window;
  std::vector<int> size;
  std::vector<std::vector<Fn>> fmap;
  std::vector<Fn> unit;  // eta at window[i]: underlying(window[i]) -> F(window[i])

  int n() const { return static_cast<int>(window.size()); }
  int position(int obj) const;  // -1 when not in the window
  const std::vector<Fn>& on(int i, int j) const { return fmap[i * n() + j]; }
};

ValidationReport validate_coaugmented(const CoaugmentedEndofunctor& F);
CoaugmentedEndofunctor identity_coaugmented(const ConcreteCategory& amb,
                                            const std::vector<int>& window);
// (T_D, eta) on the window; values[i] is T_D(window[i]).
CoaugmentedEndofunctor codensity_coaugmented(const ConcreteCategory& amb,
                                             const std::vector<int>& D,
                                             const std::vector<int>& window,
                                             std::vector<CodensityValue>* values = nullptr);

// T_D(h)(phi)_d(f') = phi_d(f' o h) for h: c -> c'.
Fn codensity_map(const ConcreteCategory& amb, const CodensityValue& from, const CodensityValue& to,
                 const Fn& h);

// eta_d bijective for every d in D. Every d must lie in the window.
bool d_preserving_check(const CoaugmentedEndofunctor& F, const std::vector<int>& D);

// Natural transformations F => G commuting with the coaugmentations, in
// lexicographic order. Both functors must share ambient and window.
FamilyProblem coaugmented_maps_problem(const CoaugmentedEndofunctor& F,
                                       const CoaugmentedEndofunctor& G);
uint64_t count_coaugmented_maps(const CoaugmentedEndofunctor& F, const CoaugmentedEndofunctor& G);

// Number of coaugmented transformations F => T_D on F's window.
uint64_t terminality_count(const CoaugmentedEndofunctor& F, const std::vector<int>& D);

// Window objects that are retracts of some d in D.
std::vector<int> retract_closure(const ConcreteCategory& amb, const std::vector<int>& D,
                                 const std::vector<int>& window);

// Restricting families from D' to D, where D is a subset of D'. Returns true iff
// the restriction T_{D'}(c) -> T_D(c) is a bijection.
bool restriction_bijective(const ConcreteCategory& amb, const std::vector<int>& D,
                           const std::vector<int>& Dprime, int c);

}  // namespace ck
