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

#include <algorithm>
#include <set>

#include "catch_amalgamated.hpp"
#include "ck/fincat/category.hpp"
#include "ck/fincat/concrete.hpp"
#include "ck/fincat/constructions.hpp"
#include "ck/fincat/io.hpp"
#include "ck/fincat/limits.hpp"
#include "ck/fincat/ordinal.hpp"

using namespace ck;

namespace {

// Count of monotone maps a -> b by brute force over all functions.
int brute_monotone(int a, int b) {
  int n = 0;
  for (auto& f : all_functions(a, b)) {
    bool mono = true;
    for (int i = 1; i < a; ++i)
      if (f[i] < f[i - 1]) mono = false;
    n += mono;
  }
  return n;
}

CatPtr abc_poset() { return share(chain_poset({"a", "b", "c"})); }

}  // namespace

TEST_CASE("terminal category validates") {
  auto r = validate_category(terminal_category());
  CHECK(r.ok);
}

TEST_CASE("non-associative table is reported with its triple") {
  // Monoid {e, x, y} with x.x = y, y.y = x, x.y = e, y.x = x breaks associativity.
  std::vector<Morphism> mors{{"e", 0, 0}, {"x", 0, 0}, {"y", 0, 0}};
  std::vector<Id> table{0, 1, 2,   // e . (e,x,y)
                        1, 2, 0,   // x . (e,x,y)
                        2, 1, 1};  // y . (e,x,y)
  auto c = FinCategory::from_table({"*"}, mors, {0}, table);
  auto r = validate_category(c);
  REQUIRE_FALSE(r.ok);
  bool named = std::any_of(r.violations.begin(), r.violations.end(),
                           [](const std::string& s) { return s.find("associativity fails at (") != std::string::npos; });
  CHECK(named);
}

TEST_CASE("truncated simplex categories are valid with binomial hom counts") {
  auto plus = simplex_category(SimplexKind::Plus, 0, 3);
  CHECK(validate_category(plus).ok);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      CHECK(static_cast<int>(plus.hom(a, b).size()) == brute_monotone(a, b));
  CHECK(validate_category(simplex_category(SimplexKind::Delta, 1, 4)).ok);
  CHECK(validate_category(simplex_category(SimplexKind::Max, 1, 4)).ok);
  CHECK(validate_category(simplex_category(SimplexKind::PlusInj, 0, 4)).ok);
  CHECK(validate_category(cyclic_group(3)).ok);
  CHECK(validate_category(product(arrow_category(), cyclic_group(2))).ok);
  CHECK(validate_category(opposite(plus)).ok);
}

TEST_CASE("comma_under on the chain poset") {
  auto C = abc_poset();
  auto res = comma_under(C, {1, 2}, 0);
  CHECK(res.cat->num_objects() == 2);
  int non_identity = 0;
  for (int f = 0; f < res.cat->num_morphisms(); ++f) non_identity += !res.cat->is_identity(f);
  CHECK(non_identity == 1);
  CHECK(validate_functor(res.projection).ok);
  // c in D: identity is initial.
  auto res2 = comma_under(C, {0, 1, 2}, 0);
  auto init = initial_object(*res2.cat);
  REQUIRE(init);
  CHECK(res2.object_morphism[*init] == C->identity(0));
  CHECK(comma_under(C, {}, 0).cat->num_objects() == 0);
}

TEST_CASE("twisted arrow category of [1]") {
  auto C = share(arrow_category());
  auto T = twisted_arrow(C);
  CHECK(T.tw->num_objects() == 3);
  CHECK(validate_category(*T.tw).ok);
  CHECK(validate_functor(T.p).ok);
  CHECK(validate_functor(T.q).ok);
  std::set<std::pair<std::string, std::string>> arrows;
  for (int f = 0; f < T.tw->num_morphisms(); ++f)
    if (!T.tw->is_identity(f))
      arrows.insert({T.tw->object_name(T.tw->src(f)), T.tw->object_name(T.tw->tgt(f))});
  CHECK(arrows == std::set<std::pair<std::string, std::string>>{{"d", "id0"}, {"d", "id1"}});
  // Terminal category: Tw is terminal again.
  auto T1 = twisted_arrow(share(terminal_category()));
  CHECK(T1.tw->num_objects() == 1);
  CHECK(T1.tw->num_morphisms() == 1);
}

TEST_CASE("twisted arrow object count equals morphism count") {
  auto C = share(simplex_category(SimplexKind::Plus, 0, 2));
  auto T = twisted_arrow(C);
  CHECK(T.tw->num_objects() == C->num_morphisms());
  CHECK(validate_category(*T.tw).ok);
  // Every Tw morphism is determined by its pair.
  std::set<std::tuple<Id, Id, Id, Id>> seen;
  for (int f = 0; f < T.tw->num_morphisms(); ++f)
    seen.insert({T.tw->src(f), T.tw->tgt(f), T.pairs[f].first, T.pairs[f].second});
  CHECK(static_cast<int>(seen.size()) == T.tw->num_morphisms());
}

TEST_CASE("slice to over-fiber comparison is an isomorphism") {
  std::vector<CatPtr> corpus{share(terminal_category()), share(arrow_category()), abc_poset(),
                             share(cyclic_group(2)), share(cyclic_group(3)),
                             share(simplex_category(SimplexKind::Plus, 0, 2)),
                             share(simplex_category(SimplexKind::Max, 1, 3))};
  for (auto& C : corpus)
    for (int c = 0; c < C->num_objects(); ++c) {
      auto F = over_fiber(C, c);
      CHECK(F.comparison_bijective);
      CHECK(validate_category(*F.fiber).ok);
      int targets = 0;
      for (int f = 0; f < C->num_morphisms(); ++f) targets += C->tgt(f) == c;
      CHECK(F.fiber->num_objects() == targets);
    }
}

TEST_CASE("full subcategory of Tw over an object is larger than the slice for Z/2") {
  auto C = share(cyclic_group(2));
  auto T = twisted_arrow(C);
  // All objects of Tw(Z/2) have target *, so the full subcategory is Tw itself.
  CHECK(T.tw->num_morphisms() == 8);
  CHECK(over_fiber(C, 0).fiber->num_morphisms() == 4);
}

TEST_CASE("terminal target in a poset gives the whole category") {
  auto C = abc_poset();
  auto F = over_fiber(C, 2);
  CHECK(F.fiber->num_objects() == C->num_objects());
  CHECK(F.fiber->num_morphisms() == C->num_morphisms());
}

TEST_CASE("ordinal join is a strict monoid") {
  OrdMap empty{0, 0, {}};
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (auto& f : monotone_maps(a, b)) {
        CHECK(ordinal_join(f, empty) == f);
        CHECK(ordinal_join(empty, f) == f);
      }
  CHECK(ordinal_join(ord_identity(1), ord_identity(1)) == ord_identity(2));
  std::vector<OrdMap> small;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (auto& f : monotone_maps(a, b)) small.push_back(f);
  for (auto& f : small)
    for (auto& g : small)
      for (auto& h : small)
        CHECK(ordinal_join(ordinal_join(f, g), h) == ordinal_join(f, ordinal_join(g, h)));
  // Larger sizes, deterministic sample up to 5.
  std::vector<OrdMap> big;
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b) {
      auto ms = monotone_maps(a, b);
      for (size_t k = 0; k < ms.size(); k += 7) big.push_back(ms[k]);
    }
  for (size_t i = 0; i < big.size(); i += 3)
    for (size_t j = 1; j < big.size(); j += 5) {
      auto& f = big[i];
      auto& g = big[j];
      auto& h = big[(i + j) % big.size()];
      CHECK(ordinal_join(ordinal_join(f, g), h) == ordinal_join(f, ordinal_join(g, h)));
    }
}

TEST_CASE("max canonical form") {
  auto [f0, n0] = max_canonical_form(ord_identity(1));
  CHECK(f0.dom == 0);
  CHECK(f0.cod == 0);
  CHECK(n0 == 0);
  OrdMap g{3, 2, {0, 1, 1}};
  auto [f, n] = max_canonical_form(g);
  CHECK(f == OrdMap{1, 1, {0}});
  CHECK(n == 1);
  int count = 0;
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b)
      for (auto& m : max_maps(a, b)) {
        auto [ff, nn] = max_canonical_form(m);
        CHECK(max_from_canonical(ff, nn) == m);
        auto back = max_canonical_form(max_from_canonical(ff, nn));
        CHECK(back.first == ff);
        CHECK(back.second == nn);
        ++count;
      }
  CHECK(count > 0);
}

TEST_CASE("max_compose agrees with pointwise composition") {
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b)
      for (int c = 1; c <= 5; ++c)
        for (auto& g1 : max_maps(a, b))
          for (auto& g2 : max_maps(b, c)) CHECK(max_compose(g2, g1) == ord_compose(g2, g1));
  auto id3 = ord_identity(3);
  OrdMap g{3, 2, {0, 1, 1}};
  CHECK(max_compose(g, id3) == g);
}

TEST_CASE("limits by exhaustive search") {
  auto C = abc_poset();
  auto single = full_subcategory(C, {1});
  auto L = limit_in_finite_category(single.inclusion);
  REQUIRE(L);
  CHECK(L->apex == 1);
  auto bc = full_subcategory(C, {1, 2});
  auto L2 = limit_in_finite_category(bc.inclusion);
  REQUIRE(L2);
  CHECK(C->object_name(L2->apex) == "b");
  // Product of b and c in the diamond a <= b, a <= c, b,c <= d is the meet a.
  std::vector<std::vector<bool>> leq{{true, true, true, true},
                                     {false, true, false, true},
                                     {false, false, true, true},
                                     {false, false, false, true}};
  auto D = share(poset_category({"a", "b", "c", "d"}, leq));
  auto disc = share(discrete_category(2));
  FinFunctor pair{disc, D, {1, 2}, {D->identity(1), D->identity(2)}};
  auto L3 = limit_in_finite_category(pair);
  REQUIRE(L3);
  CHECK(D->object_name(L3->apex) == "a");
}

TEST_CASE("initial objects") {
  CHECK(initial_object(terminal_category()) == 0);
  CHECK_FALSE(initial_object(discrete_category(2)));
  CHECK(initial_object(*abc_poset()) == 0);
}

TEST_CASE("json round trip is byte stable") {
  auto C = simplex_category(SimplexKind::Plus, 0, 2);
  auto s1 = dump_stable(category_to_json(C));
  auto C2 = category_from_json(json::parse(s1));
  CHECK(validate_category(C2).ok);
  auto s2 = dump_stable(category_to_json(C2));
  CHECK(s1 == s2);
  json j = category_to_json(C);
  j.erase("identities");
  auto C3 = category_from_json(j);
  CHECK(dump_stable(category_to_json(C3)) == s1);
}

TEST_CASE("concrete categories realize functorially") {
  FinSetCategory S;
  auto M = materialize(S, {0, 1, 2, 3});
  CHECK(validate_category(*M.cat).ok);
  FinVectCategory V;
  CHECK(V.hom(2, 2).size() == 16);
  CHECK(V.hom(3, 1).size() == 8);
  auto MV = materialize(V, {0, 1, 2});
  CHECK(validate_category(*MV.cat).ok);
  // Linear maps preserve addition (xor) on F2^2 -> F2^2.
  for (auto& f : V.hom(2, 2))
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) CHECK(f[x ^ y] == (f[x] ^ f[y]));
  auto base = share(arrow_category());
  TableConcreteCategory T(base, {1, 2}, {{0}, {0, 1}, {1}});
  CHECK(T.validate().ok);
  TableConcreteCategory bad(base, {1, 2}, {{0}, {1, 0}, {1}});
  CHECK_FALSE(bad.validate().ok);
}
