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

#include <functional>
#include <string>
#include <vector>

#include "ck/fincat/ordinal.hpp"

namespace ck {

// A k-simplex of the nerve of the augmented simplex category: ordinals
// cards[0] -> ... -> cards[k] (cardinalities, 0 is [-1]) and the maps between.
struct Chain {
  std::vector<int> cards;
  std::vector<OrdMap> maps;

  int level() const { return static_cast<int>(maps.size()); }
  int last() const { return cards.back(); }
  bool degenerate() const;  // some map is an identity
  std::string str() const;  // e.g. "2-[0,2]->3-[0,0,1]->2"
  bool operator==(const Chain& o) const { return cards == o.cards && maps == o.maps; }
  bool operator<(const Chain& o) const;
};

Chain chain_face(const Chain& c, int i);
Chain chain_degeneracy(const Chain& c, int i);
Chain unit_chain(int level);  // constant at [-1]
Chain join_chains(const Chain& a, const Chain& b);
Chain join_word(const std::vector<Chain>& word, int level);

// Chains of level k with every cardinality <= B, in canonical order. With
// `injective` only chains of injective maps are listed.
std::vector<Chain> enumerate_ndelta_plus(int k, int B, bool injective = false);

// Fiber chains over the points of the last ordinal, in point order.
std::vector<Chain> join_decompose_chain(const Chain& c);

struct LevelCount {
  int level = 0;
  uint64_t chains = 0;
  uint64_t basis = 0;
  uint64_t nondegenerate_basis = 0;
  uint64_t words = 0;  // generator words whose join stays in the window
};

struct BasisReport {
  bool ok = true;
  int k = 0;
  int B = 0;
  std::vector<LevelCount> levels;
  std::vector<std::string> violations;
  std::string stamp() const;
  void fail(std::string m);
};

// Words over `generator` chains are listed up to the window and must hit every
// chain exactly once.
BasisReport word_uniqueness(int k, int B, const std::function<bool(const Chain&)>& generator,
                            bool injective = false);
// Basis = chains ending at [0]: word uniqueness, the fiber decomposition
// round trip, and closure of the basis under degeneracies.
BasisReport verify_basis_ndelta_plus(int k, int B);

// Horn generators: subsets H_n of the non-degenerate basis with horn indices.
struct HornAnnotation {
  int k = 0;
  int B = 0;
  std::vector<std::vector<Chain>> nondegenerate;  // X_n for n <= k + 1
  std::vector<std::vector<int>> H;                // indices into nondegenerate[n]
  std::vector<std::vector<int>> index;            // horn index of each H entry
};
HornAnnotation ndelta_horn_annotation(int k, int B);

struct HornReport {
  bool ok = true;
  int k = 0;
  int B = 0;
  struct Level {
    int n = 0;
    uint64_t nondegenerate = 0;
    uint64_t H = 0;
    uint64_t H_next = 0;
  };
  std::vector<Level> levels;
  bool inner = true, left = true, right = true;  // index classes satisfied
  std::vector<std::string> violations;
  std::string verdict() const;
  std::string stamp() const;
};
// H_(n+1) u H_n = X_n (non-degenerate) through h -> d_i(h)(h), for n <= k.
HornReport check_horn_annotation(const HornAnnotation& a);
HornReport verify_horn_generators_ndelta_plus(int k, int B);

// f_(k,n): [-1] below k, [0] from k on.
Chain f_kn(int k, int n);

struct InjBasisReport {
  bool ok = true;
  int n = 0;
  int B = 0;
  std::vector<LevelCount> levels;
  bool delta1_bijection = true;
  std::vector<std::string> violations;
  std::string stamp() const;
};
// Basis of N(Delta_+^inj) up to level n with cardinalities <= B, and the
// generator bijection from Delta^1 smash N.
InjBasisReport verify_basis_delta_inj(int n, int B);

}  // namespace ck
