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
#include <algorithm>
#include <set>

#include "ck/simplex/free_monoid.hpp"
#include "ck/simplex/lifting.hpp"
#include "ck/simplex/ndelta.hpp"
#include "ck/simplex/sset.hpp"
#include "oracles.hpp"

using namespace ck;

namespace {

FinCategory iso_pair() {
  // a <-> b with inverse isomorphisms u, v
  return FinCategory::build({"a", "b"}, {{"ida", 0, 0}, {"idb", 1, 1}, {"u", 0, 1}, {"v", 1, 0}},
                            {0, 1}, [](Id g, Id f) {
                              if (g < 2) return f;
                              if (f < 2) return g;
                              return g == 2 ? 1 : 0;
                            });
}

oracle::SSetTables tables(const TruncatedSSet& X) {
  oracle::SSetTables t;
  for (int n = 0; n <= X.N; ++n) t.sizes.push_back(X.size(n));
  t.face = X.face;
  t.degen = X.degen;
  return t;
}

}  // namespace

TEST_CASE("nerve sizes and simplicial identities", "[simplex]") {
  auto pt = nerve(terminal_category(), 3);
  for (int n = 0; n <= 3; ++n) CHECK(pt.size(n) == 1);
  CHECK(check_simplicial_identities(pt).ok);

  auto arrow = nerve(arrow_category(), 3);
  CHECK(arrow.size(2) == 4);
  for (int n = 0; n <= 3; ++n) CHECK(arrow.size(n) == oracle::poset_chain_count({{1, 1}, {0, 1}}, n));
  CHECK(check_simplicial_identities(arrow).ok);

  auto z2 = nerve(cyclic_group(2), 3);
  CHECK(z2.size(3) == 8);
  CHECK(check_simplicial_identities(z2).ok);
  CHECK(check_simplicial_identities(nerve(iso_pair(), 3)).ok);
  CHECK(check_simplicial_identities(nerve(chain_poset({"a", "b", "c"}), 3)).ok);
}

TEST_CASE("standard simplices, boundaries and horns", "[simplex]") {
  for (int n = 0; n <= 3; ++n) {
    auto D = standard_simplex(n, 3);
    CHECK(check_simplicial_identities(D).ok);
    for (int k = 0; k <= 3; ++k) CHECK(D.size(k) == oracle::monotone_count(k + 1, n + 1));
  }
  auto bd = boundary_simplex(2, 3);
  CHECK(check_simplicial_identities(bd).ok);
  CHECK(bd.size(2) == standard_simplex(2, 3).size(2) - 1);
  CHECK(check_simplicial_map(inclusion_map(bd, standard_simplex(2, 3))).ok);
  auto h = horn(2, 0, 2);
  CHECK(check_simplicial_identities(h).ok);
  CHECK(h.find(1, "01") >= 0);
  CHECK(h.find(1, "02") >= 0);
  CHECK(h.find(1, "12") < 0);
  CHECK(check_simplicial_map(inclusion_map(h, standard_simplex(2, 2))).ok);
}

TEST_CASE("broken face table violates the identities", "[simplex]") {
  auto X = nerve(arrow_category(), 2);
  std::swap(X.face[2][0][0], X.face[2][0][1]);
  CHECK_FALSE(check_simplicial_identities(X).ok);
}

TEST_CASE("Eilenberg-Zilber decomposition", "[simplex]") {
  auto pt = point_sset(3);
  const EZ e = ez_decompose(pt, 2, 0);
  CHECK(e.level == 0);
  CHECK(e.epi == OrdMap{3, 1, {0, 0, 0}});

  auto arrow = nerve(arrow_category(), 3);
  for (int n = 0; n <= 3; ++n)
    for (int x = 0; x < arrow.size(n); ++x) {
      const EZ z = ez_decompose(arrow, n, x);
      CHECK_FALSE(arrow.degenerate(z.level, z.root));
      CHECK(apply_operator(arrow, z.epi, z.root) == x);
      CHECK(ez_presentations(arrow, n, x) == 1);
      if (!arrow.degenerate(n, x)) CHECK(z.epi.is_identity());
    }
  auto z2 = nerve(cyclic_group(2), 3);
  for (int n = 0; n <= 3; ++n)
    for (int x = 0; x < z2.size(n); ++x) {
      const EZ z = ez_decompose(z2, n, x);
      CHECK(apply_operator(z2, z.epi, z.root) == x);
    }
}

TEST_CASE("operators compose contravariantly", "[simplex]") {
  auto X = nerve(chain_poset({"a", "b", "c"}), 3);
  for (int k = 1; k <= 4; ++k)
    for (int m = 1; m <= 4; ++m)
      for (int n = 1; n <= 4; ++n)
        for (const OrdMap& f : monotone_maps(k, m))
          for (const OrdMap& g : monotone_maps(m, n))
            for (int x = 0; x < X.size(n - 1); ++x)
              REQUIRE(apply_operator(X, ord_compose(g, f), x) ==
                      apply_operator(X, f, apply_operator(X, g, x)));
}

TEST_CASE("simplicial set JSON round trip", "[simplex]") {
  auto X = nerve(cyclic_group(2), 2);
  auto Y = sset_from_json(sset_to_json(X));
  CHECK(Y.simplices == X.simplices);
  CHECK(Y.face == X.face);
  auto j = sset_to_json(X);
  j["faces"][2][0][0] = 1;
  CHECK_THROWS_AS(sset_from_json(j), StructureError);
}

TEST_CASE("horn lifting on nerves", "[simplex][lifting]") {
  auto pt = point_sset(3);
  auto z2 = nerve(cyclic_group(2), 3);
  auto r = horn_lifting_check(to_point(z2, pt), HornClass::Kan, 3);
  CHECK(r.ok);
  CHECK(r.instances > 0);
  CHECK(r.stamp() == "evidence up to dimension 3 (kan horns)");

  auto arrow = nerve(arrow_category(), 3);
  auto inner = horn_lifting_check(to_point(arrow, pt), HornClass::Inner, 3);
  CHECK(inner.ok);
  auto kan = horn_lifting_check(to_point(arrow, pt), HornClass::Kan, 2);
  CHECK_FALSE(kan.ok);
  bool l20 = false;
  for (const auto& h : kan.horns)
    if (h.n == 2 && h.i == 0) l20 = h.failures > 0;
  CHECK(l20);
  REQUIRE_FALSE(kan.failures.empty());
  CHECK(kan.failures.front().find("Lambda^2_0") != std::string::npos);

  for (HornClass c : {HornClass::Kan, HornClass::Inner, HornClass::Left, HornClass::Right})
    CHECK(horn_lifting_check(identity_map(arrow), c, 3).ok);
}

TEST_CASE("horn tuples match maps out of the horn", "[simplex][lifting]") {
  auto X = nerve(chain_poset({"a", "b"}), 2);
  for (int i = 0; i <= 2; ++i) {
    auto H = horn(2, i, 2);
    CHECK(horn_tuples(X, 2, i).size() == oracle::count_sset_maps(tables(H), tables(X)));
  }
}

TEST_CASE("outer horns detect groupoids", "[simplex][lifting]") {
  auto pt = point_sset(2);
  struct Entry {
    const char* name;
    FinCategory C;
    bool groupoid;
  };
  std::vector<Entry> corpus{{"terminal", terminal_category(), true},
                            {"discrete", discrete_category(2), true},
                            {"Z/2", cyclic_group(2), true},
                            {"Z/3", cyclic_group(3), true},
                            {"iso", iso_pair(), true},
                            {"arrow", arrow_category(), false},
                            {"chain", chain_poset({"a", "b", "c"}), false}};
  for (const auto& e : corpus) {
    INFO(e.name);
    auto X = nerve(e.C, 2);
    bool outer = true;
    for (HornClass c : {HornClass::Left, HornClass::Right}) {
      auto r = horn_lifting_check(to_point(X, pt), c, 2);
      for (const auto& h : r.horns)
        if (h.n == 2 && (h.i == 0 || h.i == 2) && h.failures) outer = false;
    }
    CHECK(outer == e.groupoid);
  }
}

TEST_CASE("N(Delta_+) enumeration", "[simplex][ndelta]") {
  auto objs = enumerate_ndelta_plus(0, 2);
  REQUIRE(objs.size() == 3);
  CHECK(objs[0].str() == "0");
  CHECK(objs[2].str() == "2");
  for (int k = 0; k <= 3; ++k)
    for (int B = 0; B <= 3; ++B) CHECK(enumerate_ndelta_plus(k, B).size() == oracle::ndelta_chain_count(k, B));
  auto level1 = enumerate_ndelta_plus(1, 2);
  CHECK(std::is_sorted(level1.begin(), level1.end()));
  // closure under faces and degeneracies
  std::set<std::string> l1, l2;
  for (const Chain& c : level1) l1.insert(c.str());
  for (const Chain& c : enumerate_ndelta_plus(2, 2)) {
    l2.insert(c.str());
    for (int i = 0; i <= 2; ++i) CHECK(l1.count(chain_face(c, i).str()));
  }
  for (const Chain& c : level1)
    for (int i = 0; i <= 1; ++i) CHECK(l2.count(chain_degeneracy(c, i).str()));
}

TEST_CASE("fiber decomposition of chains", "[simplex][ndelta]") {
  Chain c{{2, 3, 2}, {OrdMap{2, 3, {0, 2}}, OrdMap{3, 2, {0, 0, 1}}}};
  auto parts = join_decompose_chain(c);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].str() == "1-[0]->2-[0,0]->1");
  CHECK(parts[1].str() == "1-[0]->1-[0]->1");
  CHECK(join_word(parts, 2) == c);

  Chain basis{{0, 1}, {OrdMap{0, 1, {}}}};
  REQUIRE(join_decompose_chain(basis).size() == 1);
  CHECK(join_decompose_chain(basis)[0] == basis);
  CHECK(join_decompose_chain(unit_chain(2)).empty());

  for (int k = 0; k <= 3; ++k)
    for (const Chain& x : enumerate_ndelta_plus(k, 4)) REQUIRE(join_word(join_decompose_chain(x), k) == x);
}

TEST_CASE("N(Delta_+) is free on the chains ending at [0]", "[simplex][ndelta]") {
  auto r = verify_basis_ndelta_plus(3, 4);
  for (const auto& v : r.violations) UNSCOPED_INFO(v);
  CHECK(r.ok);
  REQUIRE(r.levels.size() == 4);
  CHECK(r.levels[0].basis == 1);
  CHECK(r.levels[0].chains == 5);  // N(Delta_+)_0 = N up to 4
  for (const auto& l : r.levels) CHECK(l.words == l.chains);
  CHECK(r.levels[3].chains == 250871);
  CHECK(r.stamp() == "window: level <= 3, ordinal size <= 4, word length <= 4");

  auto bad = word_uniqueness(1, 3, [](const Chain& c) { return c.last() == 1 || c.last() == 2; });
  CHECK_FALSE(bad.ok);
}

TEST_CASE("horn generators of N(Delta_+)", "[simplex][ndelta]") {
  auto a = ndelta_horn_annotation(0, 4);
  REQUIRE(a.nondegenerate[0].size() == 1);
  CHECK(a.nondegenerate[0][0].str() == "1");
  REQUIRE(a.H[1].size() == 1);
  const Chain& h = a.nondegenerate[1][a.H[1][0]];
  CHECK(h.str() == "0-[]->1");
  CHECK(chain_face(h, 0).str() == "1");

  auto r = verify_horn_generators_ndelta_plus(2, 4);
  for (const auto& v : r.violations) UNSCOPED_INFO(v);
  CHECK(r.ok);
  CHECK(r.left);
  CHECK_FALSE(r.inner);
  CHECK(r.verdict() == "left anodyne free");
  for (const auto& l : r.levels) CHECK(l.nondegenerate == l.H + l.H_next);

  auto broken = ndelta_horn_annotation(2, 4);
  broken.H[2].pop_back();
  broken.index[2].pop_back();
  CHECK_FALSE(check_horn_annotation(broken).ok);
}

TEST_CASE("N(Delta_+^inj) basis", "[simplex][ndelta]") {
  Chain f01 = f_kn(0, 1), f11 = f_kn(1, 1);
  CHECK(f01.str() == "1-[0]->1");
  CHECK(f11.str() == "0-[]->1");
  auto r = verify_basis_delta_inj(4, 4);
  for (const auto& v : r.violations) UNSCOPED_INFO(v);
  CHECK(r.ok);
  CHECK(r.delta1_bijection);
  for (const auto& l : r.levels) {
    CHECK(l.basis == static_cast<uint64_t>(l.level + 1));
    CHECK(l.words == l.chains);
  }
}

namespace {

// A single generator in level 0 and its degeneracies.
FreeMonoidPresentation point_generator(int N) {
  FreeMonoidPresentation P;
  P.name = "free on a point";
  P.N = N;
  P.X.resize(N + 1);
  P.face.resize(N + 1);
  P.degen.resize(N + 1);
  for (int n = 0; n <= N; ++n) {
    P.X[n].push_back("a" + std::to_string(n));
    for (int i = 0; n >= 1 && i <= n; ++i) P.face[n].push_back({Word{0}});
    for (int i = 0; n < N && i <= n; ++i) P.degen[n].push_back({0});
  }
  return P;
}

}  // namespace

TEST_CASE("free presentations validate", "[simplex][filtration]") {
  CHECK(validate_presentation(point_generator(3)).ok);
  auto P = ndelta_presentation(3, 3);
  auto v = validate_presentation(P);
  for (const auto& m : v.violations) UNSCOPED_INFO(m);
  CHECK(v.ok);
  CHECK(validate_presentation(ndelta_presentation(3, 3, true)).ok);
  auto bad = point_generator(2);
  bad.face[1][0][0] = Word{};
  CHECK_FALSE(validate_presentation(bad).ok);
  auto round = presentation_from_json(presentation_to_json(P));
  CHECK(round.X == P.X);
  CHECK(round.face == P.face);
  CHECK(round.horns.size() == P.horns.size());
}

TEST_CASE("generator Eilenberg-Zilber data", "[simplex][filtration]") {
  auto P = ndelta_presentation(3, 3);
  for (int n = 0; n <= 3; ++n)
    for (int x = 0; x < P.size(n); ++x) {
      const GeneratorEZ e = generator_ez(P, n, x);
      CHECK(apply_epi(P, e.epi, e.root) == x);
      CHECK_FALSE(generator_degenerate(P, e.level, e.root));
    }
}

TEST_CASE("filtration of a free map", "[simplex][filtration]") {
  auto pt = free_map_filtration(point_generator(3), 3, 3);
  CHECK(pt.ok);
  CHECK(pt.stable_from == 0);

  auto P = ndelta_presentation(3, 4);
  auto r = free_map_filtration(P, 3, 2);
  for (const auto& m : r.violations) UNSCOPED_INFO(m);
  CHECK(r.ok);
  CHECK(r.stable_from == 3);
  for (const auto& row : r.rows)
    if (row.stage >= 0) CHECK(row.attached == row.expected);
  // level 0 of N(Delta_+): one generator, words up to length 2
  CHECK(r.rows[0].generators == 0);
  CHECK(r.rows[0].elements == 1);

  auto a = anodyne_filtration(P, 4, 2);
  CHECK(a.stable_from == 4);
  for (const auto& m : a.violations) UNSCOPED_INFO(m);
  CHECK(a.ok);
  for (const auto& row : a.rows)
    if (row.stage >= 0) CHECK(row.attached == row.expected);

  auto inj = anodyne_filtration(ndelta_presentation(3, 4, true), 4, 2);
  CHECK(inj.ok);
  CHECK(inj.stable_from == 1);

  auto broken = P;
  broken.horns.pop_back();
  CHECK_FALSE(anodyne_filtration(broken, 4, 2).ok);
}
