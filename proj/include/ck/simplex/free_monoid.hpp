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

using Word = std::vector<int>;  // generator indices, the empty word is the unit

// A free simplicial monoid up to level N, given by its basis. Faces of a
// generator are words one level down; degeneracies of generators are generators.
struct FreeMonoidPresentation {
  std::string name;
  int N = 0;
  std::vector<std::vector<std::string>> X;
  std::vector<std::vector<std::vector<Word>>> face;  // face[n][i][x], n >= 1
  std::vector<std::vector<Fn>> degen;                // degen[n][i][x], n < N
  // optional horn generators: (level, generator, horn index)
  struct Horn {
    int n = 0;
    int x = 0;
    int i = 0;
  };
  std::vector<Horn> horns;

  int size(int n) const { return static_cast<int>(X[n].size()); }
};

Word word_face(const FreeMonoidPresentation& P, int n, int i, const Word& w);
Word word_degeneracy(const FreeMonoidPresentation& P, int n, int i, const Word& w);
ValidationReport validate_presentation(const FreeMonoidPresentation& P);

struct GeneratorEZ {
  OrdMap epi;
  int level = 0;
  int root = 0;
};
GeneratorEZ generator_ez(const FreeMonoidPresentation& P, int n, int x);
bool generator_degenerate(const FreeMonoidPresentation& P, int n, int x);
// sigma^*(y) for a surjection sigma from level n onto the level of y.
int apply_epi(const FreeMonoidPresentation& P, const OrdMap& sigma, int y);

// One row per (stage k, level n). `generators` counts X_n^(k); `attached` the
// generators new at stage k; `expected` the attachment count predicted by the
// cells: |X_k nondeg| * #((Delta^k)_n minus the boundary or horn), read off the
// combinatorial subcomplexes. `elements` counts words of length <= L.
struct FiltrationRow {
  int stage = 0;
  int level = 0;
  uint64_t generators = 0;
  uint64_t attached = 0;
  uint64_t expected = 0;
  uint64_t elements = 0;
};

struct FiltrationReport {
  bool ok = true;
  bool anodyne = false;
  int N = 0;
  int L = 0;
  int stable_from = -1;  // first stage after which nothing is attached
  std::vector<FiltrationRow> rows;
  std::vector<std::string> violations;
  std::string stamp() const;
};

// The stages A^(-1) = 1, A^(k) generated by generators whose non-degenerate
// root has level <= k. Each stage is checked to be a simplicial submonoid and
// its new generators are matched with the cells of Delta^k outside the boundary.
FiltrationReport free_map_filtration(const FreeMonoidPresentation& P, int up_to, int L);
// Horn variant: stage k adds sigma^*(H_k) and tau^*(d_i(h) h); the remaining
// faces of every h must already lie in the previous stage.
FiltrationReport anodyne_filtration(const FreeMonoidPresentation& P, int up_to, int L);

// N(Delta_+) up to level N with ordinal sizes <= B, basis the chains ending
// at [0]; horn generators are the non-degenerate chains starting at [-1], index 0. With `injective`,
// the same for N(Delta_+^inj).
FreeMonoidPresentation ndelta_presentation(int N, int B, bool injective = false);

nlohmann::json presentation_to_json(const FreeMonoidPresentation& P);
FreeMonoidPresentation presentation_from_json(const nlohmann::json& j);

}  // namespace ck
