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

// Independent reference computations shared by the unit tests and the
// acceptance binary. Nothing here calls the search code it is used to check.

#include <cstdint>
#include <vector>

namespace oracle {

using Fn = std::vector<int>;

// Every function n -> m, lexicographic.
std::vector<Fn> functions(int n, int m);
Fn compose(const Fn& g, const Fn& f);

// Codensity families on FinSet by raw enumeration of all assignments
// hom(c, d) -> d, filtered by naturality. Throws if more than 2^22 candidates.
uint64_t finset_codensity_raw(const std::vector<int>& D, int c);

// Codensity families on FinSet when every d in D is at most m = max(D),
// all d >= 1, and c <= m: a family is fixed by its value on one injection
// c -> m, the remaining values come from extensions and retractions, and the
// candidate is then checked against every naturality square.
struct FamilyCount {
  uint64_t count = 0;
  bool unit_bijective = false;
};
FamilyCount finset_codensity_generated(const std::vector<int>& D, int c);

// Families for D = {F2, F2^2} at V = F2^n: phi on F2-valued maps is free, the
// F2^2 component is forced through the two projections, then every linear
// naturality square is checked. Also reports whether evaluation at vectors is
// a bijection onto the families (the double-dual comparison).
FamilyCount double_dual_families(int n);

// Structure maps a: P(n) -> n with a({i}) = i and a(union E) = a({a(e) : e in E})
// for every family E of subsets, by enumeration of all maps on bitmasks.
uint64_t powerset_algebra_count(int n);

// Affine combinations over Z/q stored as dense coefficient vectors.
std::vector<std::vector<int>> affine_elements(int q, int n);
// Structure maps on R_a(n) over Z/q checked against every element of R_a(R_a(n)).
uint64_t affine_algebra_count(int q, int n);

// Subsets m of n with {{x} : x in m} == {m}, as bitmasks.
std::vector<uint32_t> powerset_equalizer(int n);
// Elements m of R_a(n) over Z/q whose combination of Diracs equals 1 * [m].
std::vector<std::vector<int>> affine_equalizer(int q, int n);

// The walking action for the chain algebra max: P(x) -> x (max of the empty
// set is 0), evaluated on explicit nested sets. Maps are max-preserving
// value arrays; psi(g) first applies a^n at the inner layers, then the cobar
// map of f, built from an epi-mono factorization. Checks psi(g2 g1) =
// psi(g2) psi(g1) for all composable pairs with cardinalities <= max_card,
// exhaustively on levels with at most 256 elements and on `samples` random
// nested sets otherwise. Returns the number of failures.
struct WalkingTally {
  uint64_t pairs = 0;
  uint64_t evaluations = 0;
  uint64_t failures = 0;
};
WalkingTally walking_chain_oracle(int x, int max_card, int samples);

// Sequences x_0 <= ... <= x_k in a poset given by leq[i][j] = (i <= j).
uint64_t poset_chain_count(const std::vector<std::vector<int>>& leq, int k);
// Weakly increasing maps from a points to b points, by listing them.
uint64_t monotone_count(int a, int b);

// Chains of level k in the augmented simplex category with sizes <= B, as a
// sum over size sequences of products of binomial coefficients.
uint64_t ndelta_chain_count(int k, int B);

// Raw simplicial tables: face[n][i] : level n -> n-1, degen[n][i] : n -> n+1.
struct SSetTables {
  std::vector<int> sizes;
  std::vector<std::vector<Fn>> face;
  std::vector<std::vector<Fn>> degen;
};
// Simplicial maps K -> X by assigning every simplex of K level by level.
uint64_t count_sset_maps(const SSetTables& K, const SSetTables& X);

}  // namespace oracle
