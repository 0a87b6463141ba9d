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

#include "ck/common.hpp"
#include "ck/fincat/category.hpp"
#include "ck/fincat/ordinal.hpp"
#include "json.hpp"

namespace ck {

// A simplicial set known up to dimension N. face[n][i] maps level n to n-1
// (n >= 1, 0 <= i <= n); degen[n][i] maps level n to n+1 (n < N, 0 <= i <= n).
struct TruncatedSSet {
  std::string name;
  int N = 0;
  std::vector<std::vector<std::string>> simplices;
  std::vector<std::vector<Fn>> face;
  std::vector<std::vector<Fn>> degen;

  int size(int n) const { return static_cast<int>(simplices[n].size()); }
  int d(int n, int i, int x) const { return face[n][i][x]; }
  int s(int n, int i, int x) const { return degen[n][i][x]; }
  int find(int n, const std::string& id) const;  // -1 if absent
  bool degenerate(int n, int x) const;
};

ValidationReport check_simplicial_identities(const TruncatedSSet& X);

// theta^*(x) for theta: [k] -> [n] given on cardinalities k+1 -> n+1; x at level n.
int apply_operator(const TruncatedSSet& X, const OrdMap& theta, int x);

struct EZ {
  OrdMap epi;  // [n] ->> [m]
  int level = 0;
  int root = 0;  // non-degenerate simplex at level m
};
EZ ez_decompose(const TruncatedSSet& X, int n, int x);
// Number of pairs (epi, non-degenerate y) with epi^*(y) = x; 1 for every simplex.
int ez_presentations(const TruncatedSSet& X, int n, int x);

// Composable chains; level 0 lists objects, level k lists k-chains named by
// their morphisms in order of composition, separated by ';'.
TruncatedSSet nerve(const FinCategory& C, int N);

// Delta^n and its subcomplexes on vertex strings such as "001".
TruncatedSSet standard_simplex(int n, int N);
TruncatedSSet boundary_simplex(int n, int N);
TruncatedSSet horn(int n, int i, int N);
TruncatedSSet point_sset(int N);

struct SimplicialMap {
  const TruncatedSSet* dom = nullptr;
  const TruncatedSSet* cod = nullptr;
  std::vector<Fn> level;
};
ValidationReport check_simplicial_map(const SimplicialMap& f);
SimplicialMap to_point(const TruncatedSSet& X, const TruncatedSSet& pt);
SimplicialMap identity_map(const TruncatedSSet& X);
// Levelwise inclusion by simplex id.
SimplicialMap inclusion_map(const TruncatedSSet& sub, const TruncatedSSet& X);

nlohmann::json sset_to_json(const TruncatedSSet& X);
TruncatedSSet sset_from_json(const nlohmann::json& j);

}  // namespace ck
