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

#include "catch_amalgamated.hpp"
#include "ck/fincat/concrete.hpp"
#include "ck/fincat/ordinal.hpp"
#include "ck/kan/codensity.hpp"
#include "ck/kan/codensity_monad.hpp"
#include "ck/kan/cofinality.hpp"
#include "ck/kan/localization.hpp"
#include "ck/monadkit/laws.hpp"
#include "oracles.hpp"

using namespace ck;

TEST_CASE("family solver enumerates in lexicographic order") {
  // Two blocks of two variables over {0,1,2}, tied by x1[e] = x0[e].
  FamilyProblem p;
  p.add_block(2, 3);
  p.add_block(2, 3);
  p.arrows.push_back({0, 1, {0, 1}, {0, 1, 2}});
  auto sols = all_families(p);
  REQUIRE(sols.size() == 9);
  CHECK(std::is_sorted(sols.begin(), sols.end()));
  p.pins.push_back({1, 0, 2});
  CHECK(count_families(p) == 3);
}

TEST_CASE("family solver respects the guard") {
  FamilyProblem p;
  p.add_block(30, 2);
  uint64_t old = guard_limit();
  set_guard_limit(1000);
  CHECK_THROWS_AS(count_families(p), ResourceError);
  set_guard_limit(old);
}

TEST_CASE("codensity value at c in D is evaluation") {
  FinSetCategory S;
  for (int c = 1; c <= 3; ++c) {
    auto v = codensity_value(S, {c}, c);
    CHECK(v.size() == c);
    CHECK(v.unit_bijective());
  }
}

TEST_CASE("codensity of the two-element set") {
  FinSetCategory S;
  auto v = codensity_value(S, {2}, 3);
  CHECK(v.size() == 8);
  CHECK(oracle::finset_codensity_raw({2}, 3) == 8);
  CHECK(families_natural(S, v));
  CHECK(std::is_sorted(v.elements.begin(), v.elements.end()));
  CHECK(v.unit_injective());
  const int expect[] = {0, 1, 2, 8};
  for (int c = 0; c <= 3; ++c) {
    CHECK(codensity_value(S, {2}, c).size() == expect[c]);
    CHECK(oracle::finset_codensity_raw({2}, c) == static_cast<uint64_t>(expect[c]));
  }
}

TEST_CASE("codensity of sizes 1, 2, 4") {
  FinSetCategory S;
  auto v = codensity_value(S, {1, 2, 4}, 3);
  CHECK(v.size() == 3);
  CHECK(v.unit_bijective());
  CHECK(families_natural(S, v));
  auto o = oracle::finset_codensity_generated({1, 2, 4}, 3);
  CHECK(o.count == 3);
  CHECK(o.unit_bijective);
  CHECK(codensity_value(S, {1, 2}, 3).size() == 8);
  CHECK(oracle::finset_codensity_raw({1, 2}, 3) == 8);
}

TEST_CASE("empty D gives the single empty family") {
  FinSetCategory S;
  auto v = codensity_value(S, {}, 2);
  CHECK(v.size() == 1);
  CHECK(v.elements[0].empty());
}

TEST_CASE("codensity in FinVect is the double dual") {
  FinVectCategory V;
  for (int n = 0; n <= 3; ++n) {
    auto v = codensity_value(V, {1, 2}, n);
    CHECK(v.size() == (1 << n));
    CHECK(v.unit_bijective());
    auto o = oracle::double_dual_families(n);
    CHECK(o.count == static_cast<uint64_t>(1 << n));
    CHECK(o.unit_bijective);
  }
}

TEST_CASE("codensity coaugmented functor") {
  FinSetCategory S;
  std::vector<int> window{0, 1, 2, 3};
  auto T = codensity_coaugmented(S, {1, 2, 4}, window);
  CHECK(validate_coaugmented(T).ok);
  CHECK(d_preserving_check(T, {1, 2}));
  auto Id = identity_coaugmented(S, window);
  CHECK(validate_coaugmented(Id).ok);
  CHECK(d_preserving_check(Id, {0, 1, 2, 3}));
  CHECK(terminality_count(T, {1, 2, 4}) == 1);
  CHECK(terminality_count(Id, {1, 2, 4}) == 1);
  auto T2 = codensity_coaugmented(S, {2}, {0, 1, 2, 3});
  CHECK(validate_coaugmented(T2).ok);
  CHECK(terminality_count(T2, {2}) == 1);
  CHECK(terminality_count(Id, {2}) == 1);
}

TEST_CASE("D equal to the window gives the identity") {
  FinSetCategory S;
  std::vector<int> window{1, 2, 3};
  auto T = codensity_coaugmented(S, window, window);
  for (int i = 0; i < 3; ++i) CHECK(T.size[i] == window[i]);
  CHECK(d_preserving_check(T, window));
}

TEST_CASE("retract closure") {
  FinSetCategory S;
  std::vector<int> window{0, 1, 2, 3, 4};
  auto cl = retract_closure(S, {4}, window);
  CHECK(cl == std::vector<int>{1, 2, 3, 4});
  CHECK(retract_closure(S, cl, window) == cl);
  // Extensive, monotone, idempotent on all subsets of the window.
  for (int mask = 0; mask < 32; ++mask) {
    std::vector<int> D;
    for (int i = 0; i < 5; ++i)
      if (mask >> i & 1) D.push_back(i);
    auto c1 = retract_closure(S, D, window);
    for (int d : D) CHECK(std::find(c1.begin(), c1.end(), d) != c1.end());
    CHECK(retract_closure(S, c1, window) == c1);
    for (int mask2 = mask; mask2 < 32; mask2 = (mask2 + 1) | mask) {
      std::vector<int> D2;
      for (int i = 0; i < 5; ++i)
        if (mask2 >> i & 1) D2.push_back(i);
      auto c2 = retract_closure(S, D2, window);
      for (int x : c1) CHECK(std::find(c2.begin(), c2.end(), x) != c2.end());
    }
  }
  for (int c = 0; c <= 3; ++c) CHECK(restriction_bijective(S, {4}, {1, 2, 3, 4}, c));
}

TEST_CASE("localization of a chain poset") {
  auto C = share(chain_poset({"a", "b", "c"}));
  auto L = reflector_and_localization(C, {1, 2});
  REQUIRE(L);
  CHECK(L->L.on_objects == std::vector<Id>{1, 1, 2});
  CHECK(L->triangles_ok);
  CHECK(L->eta_initial);
  CHECK(L->limit_ok);
  auto Lid = reflector_and_localization(C, {0, 1, 2});
  REQUIRE(Lid);
  CHECK(functors_equal(Lid->L, identity_functor(C)));
  auto Disc = share(discrete_category(2));
  CHECK_FALSE(reflector_and_localization(Disc, {0}));
}

TEST_CASE("initial functor criterion") {
  auto K = share(simplex_category(SimplexKind::Delta, 1, 4));
  auto J = share(simplex_category(SimplexKind::Delta, 1, 2));
  FinFunctor inc{J, K, {0, 1}, {}};
  for (int f = 0; f < J->num_morphisms(); ++f) inc.on_morphisms.push_back(*K->find_morphism(J->morphism(f).name));
  REQUIRE(validate_functor(inc).ok);
  auto r = is_initial_functor(inc);
  CHECK(r.initial);
  CHECK(is_initial_functor(identity_functor(K)).initial);
  auto E = share(empty_category());
  FinFunctor empty{E, K, {}, {}};
  CHECK_FALSE(is_initial_functor(empty).initial);
  // The vertex [0] alone is not initial in the window: (F | [1]) has two components.
  auto P = share(simplex_category(SimplexKind::Delta, 1, 1));
  FinFunctor pt{P, K, {0}, {*K->find_morphism(P->morphism(0).name)}};
  auto rp = is_initial_functor(pt);
  CHECK_FALSE(rp.initial);
  CHECK(rp.components[1] == 2);
}

TEST_CASE("identity cofinality witness") {
  auto C = share(chain_poset({"a", "b"}));
  auto I = identity_functor(C);
  CofinalityWitness w{I, I, I, I, I, I, 0, {}, {}, {}, {}};
  // sigma: Const(a) => Id has components a <= c.
  for (int c = 0; c < 2; ++c) {
    w.sigma.push_back(C->hom(0, c)[0]);
    w.tau.push_back(C->hom(0, c)[0]);
    w.xi.push_back(C->identity(c));
    w.zeta.push_back(C->identity(c));
  }
  auto r = cofinality_witness_check(w);
  CHECK(r.ok);
  CHECK(r.conclusion.initial);
}

TEST_CASE("cofinality witness rejects a zeta without left inverse") {
  auto C = share(chain_poset({"a", "b"}));
  auto I = identity_functor(C);
  FinFunctor top = constant_functor(C, C, 1);
  std::vector<int> from_a{C->hom(0, 1)[0], C->hom(0, 1)[0]};
  std::vector<int> to_top{C->hom(0, 1)[0], C->identity(1)};
  CofinalityWitness w{I, I, I, I, top, top, 0, from_a, to_top, from_a, to_top};
  auto r = cofinality_witness_check(w);
  CHECK_FALSE(r.ok);
  bool named = false;
  for (auto& f : r.failures) named = named || f.find("left invertible at a") != std::string::npos;
  CHECK(named);
}


TEST_CASE("codensity monads pass the laws") {
  CodensityMonad T({1, 2, 4});
  CHECK(T.size(T.apply({0, 3})) == 3);
  auto r = monad_law_check(T, {0, 1, 2, 3});
  INFO((r.ok ? "" : r.violations.front()));
  CHECK(r.ok);
  CodensityMonad U({2});
  CHECK(U.size(U.apply({0, 3})) == 8);
  auto s = monad_law_check(U, {0, 1, 2});
  CHECK(s.ok);
  // D = window: every unit is a bijection.
  CodensityMonad V({0, 1, 2});
  for (int c = 0; c <= 2; ++c) CHECK(V.value(c).unit_bijective());
}
