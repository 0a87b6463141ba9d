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
#include "ck/bkshadow/builtin.hpp"
#include "ck/monadkit/algebra.hpp"
#include "ck/monadkit/fakir.hpp"
#include "ck/monadkit/sketch.hpp"
#include "ck/monadkit/walking.hpp"
#include "oracles.hpp"

using namespace ck;

TEST_CASE("powerset algebra counts match brute force") {
  auto P = powerset_monad();
  for (int n = 0; n <= 3; ++n) {
    auto r = algebra_search(*P, n);
    CHECK_FALSE(r.binary);
    CHECK(r.found.size() == oracle::powerset_algebra_count(n));
    for (auto& s : r.found) CHECK(is_algebra(*P, n, s.a));
  }
}

TEST_CASE("binary union constraints agree with the full search") {
  auto P = powerset_monad();
  for (int n = 0; n <= 4; ++n) {
    auto full = algebra_search(*P, n);
    auto reduced = algebra_search(*P, n, 0, true);
    CHECK_FALSE(full.binary);
    CHECK(reduced.binary);
    std::vector<Fn> a, b;
    for (auto& s : full.found) a.push_back(s.a);
    for (auto& s : reduced.found) b.push_back(s.a);
    CHECK(a == b);
  }
  auto P5 = algebra_search(*P, 5, 1);
  CHECK(P5.binary);
  REQUIRE(P5.found.size() == 1);
}

TEST_CASE("affine algebra counts match brute force") {
  auto Ra = builtin_monad("affine:Z/2");
  for (int n = 0; n <= 4; ++n) {
    auto r = algebra_search(*Ra, n);
    CHECK(r.found.size() == oracle::affine_algebra_count(2, n));
  }
  CHECK(algebra_search(*Ra, 3).found.empty());
  CHECK(algebra_search(*Ra, 0).found.size() == 1);
}

TEST_CASE("free algebras pass the axioms") {
  // Term monads encode T(X) by the size of X alone, so mu_c is a structure
  // map on the skeletal set of size |T(c)|.
  for (const auto& name : builtin_names()) {
    auto M = builtin_monad(name);
    for (int c = 0; c <= 2; ++c) {
      const int tc = M->checked_size({1, c});
      if (!M->enumerable({0, static_cast<int>(M->size({2, tc}))})) continue;
      std::string why;
      INFO(name << " at " << c << " " << why);
      CHECK(is_algebra(*M, tc, M->mult_table({0, c}), &why));
    }
  }
}

TEST_CASE("retract witnesses give left inverses of eta") {
  auto P = powerset_monad();
  for (int x = 1; x <= 5; ++x) {
    auto w = retract_membership(*P, x, {0, 1, 2, 3, 4, 5});
    REQUIRE(w);
    CHECK(w->verified);
  }
  CHECK_FALSE(retract_membership(*P, 0, {0, 1, 2, 3}));
  auto Ra = builtin_monad("affine:Z/2");
  auto w0 = retract_membership(*Ra, 0, {0, 1, 2});
  REQUIRE(w0);
  CHECK(w0->c == 0);
}

TEST_CASE("splitting from an algebra and by table search") {
  auto P = powerset_monad();
  auto alg = algebra_search(*P, 2, 1).found.at(0);
  auto s = split_resolution_search(*P, 2, 2, &alg);
  CHECK(s.found);
  CHECK_FALSE(s.symbolic);
  auto s3 = split_resolution_search(*P, 3, 2, &algebra_search(*P, 3, 1).found.at(0));
  CHECK(s3.found);
  CHECK(s3.symbolic);
  // Without the algebra the search has to find tables on its own.
  auto t1 = split_resolution_search(*P, 1, 1);
  auto t2 = split_resolution_search(*P, 1, 2);
  CHECK(t1.found);
  CHECK(t2.found);
  CHECK_FALSE(split_resolution_search(*P, 0, 0).found);
  // A broken algebra is caught.
  AlgebraStructure bad = alg;
  bad.a[0] = 1;
  CHECK_FALSE(split_resolution_search(*P, 2, 2, &bad).found);
}

TEST_CASE("splitting depth 1 and 2 agree on the powerset window") {
  auto P = powerset_monad();
  for (int x = 0; x <= 2; ++x)
    CHECK(split_resolution_search(*P, x, 1).found == split_resolution_search(*P, x, 2).found);
}

TEST_CASE("isar chain for powerset and affine monads") {
  auto P = powerset_monad();
  auto r = isar_chain_check(*P, {0, 1, 2, 3, 4, 5}, 2);
  CHECK(r.ok());
  CHECK(r.I == std::vector<int>{1, 2, 4});
  CHECK(r.A == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(r.S == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(r.R == std::vector<int>{1, 2, 3, 4, 5});
  auto Ra = builtin_monad("affine:Z/2");
  auto q = isar_chain_check(*Ra, {0, 1, 2, 3, 4}, 2);
  CHECK(q.ok());
  CHECK(q.I == std::vector<int>{0, 1, 2, 4});
  CHECK(q.A == std::vector<int>{0, 1, 2, 4});
  CHECK(q.R == std::vector<int>{0, 1, 2, 3, 4});
  auto I = identity_monad();
  auto id = isar_chain_check(*I, {0, 1, 2, 3}, 2);
  std::vector<int> all{0, 1, 2, 3};
  CHECK(id.I == all);
  CHECK(id.A == all);
  CHECK(id.S == all);
  CHECK(id.R == all);
}

TEST_CASE("fakir subsets against the elementwise oracle") {
  auto P = powerset_monad();
  auto F = fakir(*P, {0, 1, 2, 3, 4});
  CHECK(F.unit_lands);
  CHECK(F.invariant);
  for (int n = 0; n <= 4; ++n) {
    std::vector<int> want;
    for (uint32_t m : oracle::powerset_equalizer(n)) want.push_back(static_cast<int>(m));
    CHECK(F.subset[n] == want);
  }
  auto Ra = affine_span_monad(integers_mod(2));
  auto G = fakir(*Ra, {0, 1, 2, 3});
  for (int n = 0; n <= 3; ++n) {
    std::vector<int> want;
    for (auto& v : oracle::affine_equalizer(2, n)) want.push_back(affine_id(integers_mod(2), v));
    std::sort(want.begin(), want.end());
    CHECK(G.subset[n] == want);
  }
  // An idempotent monad is its own equalizer.
  auto I = identity_monad();
  auto H = fakir(*I, {0, 1, 2});
  CHECK(H.subset[2] == std::vector<int>{0, 1});
}

TEST_CASE("fakir against codensity over the algebra subcategory") {
  auto P = powerset_monad();
  for (int c = 0; c <= 3; ++c) {
    auto r = fakir_vs_codensity(*P, c, {1, 2, 3, 4}, 3);
    INFO("c = " << c);
    CHECK(r.matches);
    CHECK(r.stable_from >= 0);
    CHECK(r.stable_from <= 4);
    CHECK(r.rungs.back().codensity_size == r.fakir_size);
  }
  auto Ra = builtin_monad("affine:Z/2");
  auto z = fakir_vs_codensity(*Ra, 0, {1, 2, 3, 4}, 3);
  CHECK(z.matches);
  CHECK(z.fakir_size == 0);
}

TEST_CASE("monad morphisms out of the identity") {
  std::vector<int> w{0, 1, 2, 3};
  for (const auto& name : builtin_names()) {
    auto M = builtin_monad(name);
    auto r = monad_morphisms_from_identity(*M, w);
    INFO(name << " naturals " << r.naturals.size());
    REQUIRE(r.morphisms.size() == 1);
    CHECK(r.is_unit(r.morphisms[0], *M, w));
  }
  CHECK(monad_morphisms_from_identity(*powerset_monad(), w).naturals.size() == 2);
}

TEST_CASE("program shapes") {
  OrdMap f{3, 2, {0, 0, 1}};
  CHECK(program_string(phi_program(f)) == "mu@0");
  CHECK(program_string(phi_program(ord_identity(2))) == "id");
  CHECK(program_string(phi_program(coface(1, 0))) == "eta@0");
  CHECK(program_string(walking_program(amax(1))) == "a@0");
  CHECK(program_string(walking_program(amax(2))) == "a@1 a@0");
  CHECK_THROWS_AS(program_output_depth({{StepKind::Act, 0}}, 2), StructureError);
}

TEST_CASE("cobar functor on the powerset window") {
  auto P = powerset_monad();
  for (int x = 0; x <= 3; ++x) {
    auto r = cobar_check(*P, x, 3);
    INFO(x << ": " << (r.ok() ? "" : r.violations.front()));
    CHECK(r.ok());
  }
  // Coface and codegeneracy tables at level 1.
  ProgramEvaluator ev(*P, 2);
  CHECK(ev.run({{StepKind::Unit, 0}}, 1) == P->unit_table({1, 2}));
  CHECK(ev.run({{StepKind::Unit, 1}}, 1) == P->fmap_table({0, 2}, {1, 2}, P->unit_table({0, 2})));
  CHECK(ev.run({{StepKind::Mult, 0}}, 2) == P->mult_table({0, 2}));
}

TEST_CASE("walking action of the chain algebra") {
  auto P = powerset_monad();
  AlgebraStructure alg{3, powerset_chain_algebra(3)};
  REQUIRE(is_algebra(*P, 3, alg.a));
  CHECK(walking_action(*P, alg, ord_identity(1)) == Fn{0, 1, 2});
  CHECK(walking_action(*P, alg, amax(1)) == alg.a);
  auto r = walking_check(*P, alg, 4);
  INFO((r.ok() ? "" : r.violations.front()));
  CHECK(r.ok());
  CHECK(r.symbolic > 0);
  auto o = oracle::walking_chain_oracle(3, 4, 40);
  CHECK(o.failures == 0);
  CHECK(o.pairs == r.checked - 4);
  // A map that is not an algebra breaks functoriality.
  AlgebraStructure bad{3, alg.a};
  bad.a[0b110] = 1;
  CHECK_FALSE(walking_check(*P, bad, 3).ok());
}

TEST_CASE("cobar cofinality sketch for the powerset monad", "[monadkit][sketch]") {
  auto P = powerset_monad(false);
  const CofinalityWitness w = cobar_cofinality_witness(*P);
  CHECK(w.F.cod->num_objects() == 2);
  CHECK(w.Fbig.cod->num_objects() == 3);
  const WitnessReport r = cofinality_witness_check(w);
  for (const auto& f : r.failures) UNSCOPED_INFO(f);
  CHECK(r.ok);
  CHECK(r.conclusion.initial);
}

TEST_CASE("cobar sketch rejects a monad with repeating sizes", "[monadkit][sketch]") {
  CHECK_THROWS_AS(cobar_cofinality_witness(*identity_monad()), StructureError);
}
