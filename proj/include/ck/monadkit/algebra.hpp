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

#include "ck/monadkit/monad.hpp"

namespace ck {

struct AlgebraStructure {
  int carrier = 0;
  Fn a;  // T(carrier) -> carrier
};

struct AlgebraSearch {
  std::vector<AlgebraStructure> found;  // lexicographic in the table of a
  bool complete = true;                 // false when stopped at the limit
  bool binary = false;                  // only unions of two sets were imposed
  uint64_t nodes = 0;
};

// Every a: T(x) -> x with a.eta = id and a.mu = a.T(a), stopping after limit
// structures when limit > 0. For set-like term monads whose T^2(x) is too
// large, the associativity constraint is imposed on unions of at most two sets;
// force_binary selects that reduction regardless of size.
AlgebraSearch algebra_search(const Monad& M, int x, size_t limit = 0, bool force_binary = false);

// Direct check of both axioms; T^2(x) must be enumerable.
bool is_algebra(const Monad& M, int x, const Fn& a, std::string* why = nullptr);

// x as a retract of T(c) together with the left inverse of eta_x built from it:
// r' = r . mu_c . T(s).
struct RetractWitness {
  int c = 0;
  Fn section;     // x -> T(c)
  Fn retraction;  // T(c) -> x
  Fn left_inverse;  // T(x) -> x
  bool verified = false;
};
std::optional<RetractWitness> retract_membership(const Monad& M, int x,
                                                 const std::vector<int>& window);

// Extra degeneracies s^n: T^{n+1}(c) -> T^n(c) for n <= t on the cobar
// resolution of c. With an algebra the candidate s^n = T^n(a) is verified;
// otherwise the tables are searched level by level.
struct Splitting {
  bool found = false;
  bool from_algebra = false;
  bool symbolic = false;  // some relation was decided on generic elements
  int relations = 0;
  std::vector<Fn> s;  // filled when the levels are enumerable
  std::string detail;
};
Splitting split_resolution_search(const Monad& M, int c, int t,
                                  const AlgebraStructure* algebra = nullptr);

struct IsarReport {
  std::vector<int> window;
  int depth = 2;
  std::vector<int> I, A, S, R;
  std::vector<RetractWitness> retracts;  // one per member of R
  std::vector<std::string> violations;
  std::vector<std::string> notes;
  bool ok() const { return violations.empty(); }
};
IsarReport isar_chain_check(const Monad& M, const std::vector<int>& window, int t = 2);

}  // namespace ck
