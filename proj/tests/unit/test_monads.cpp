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

#include <chrono>

#include "catch_amalgamated.hpp"
#include "ck/bkshadow/builtin.hpp"
#include "ck/monadkit/laws.hpp"
#include "ck/monadkit/table_monad.hpp"

using namespace ck;

TEST_CASE("ring tables") {
  CHECK(validate_ring(integers_mod(2)).ok);
  CHECK(validate_ring(integers_mod(6)).ok);
  FiniteRing bad = integers_mod(3);
  bad.mul[1][2] = 0;
  CHECK_FALSE(validate_ring(bad).ok);
  CHECK(integers_mod(5).neg(2) == 3);
  CHECK_THROWS_AS(parse_ring("/nonexistent/ring.json"), StructureError);
}

TEST_CASE("affine element encoding round trips") {
  FiniteRing R = integers_mod(3);
  for (int m = 1; m <= 3; ++m)
    for (int id = 0; id < static_cast<int>(ipow(3, m - 1)); ++id) {
      auto c = affine_coefficients(R, m, id);
      int sum = 0;
      for (int v : c) sum += v;
      CHECK(sum % 3 == 1);
      CHECK(affine_id(R, c) == id);
    }
  CHECK(affine_id(R, {1, 1}) == -1);
}

TEST_CASE("builtin carrier sizes") {
  auto P = powerset_monad();
  CHECK(P->size({1, 3}) == 8);
  CHECK(P->size({2, 2}) == 16);
  CHECK(powerset_monad(true)->size({1, 3}) == 7);
  CHECK(maybe_monad()->size({2, 3}) == 5);
  auto Ra = builtin_monad("affine:Z/2");
  CHECK(Ra->size({1, 0}) == 0);
  CHECK(Ra->size({1, 3}) == 4);
  CHECK(Ra->size({2, 3}) == 8);
  CHECK(builtin_monad("builtin:writer:Z/2")->size({1, 3}) == 6);
  CHECK_THROWS_AS(builtin_monad("list"), StructureError);
}

TEST_CASE("affine unit is the Dirac combination") {
  auto Ra = builtin_monad("affine:Z/3");
  Terms t;
  for (int x = 0; x < 3; ++x) {
    Ra->decode({0, 3}, Ra->unit({0, 3}, x), t);
    REQUIRE(t.size() == 1);
    CHECK(t[0].child == x);
    CHECK(t[0].label == 1);
  }
}

TEST_CASE("monad laws for the builtin corpus on sizes up to 4") {
  for (const auto& name : builtin_names()) {
    auto t0 = std::chrono::steady_clock::now();
    auto r = monad_law_check(*builtin_monad(name), {0, 1, 2, 3, 4});
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    INFO(name << " " << (r.violations.empty() ? "" : r.violations.front()));
    CHECK(r.ok);
    CHECK(secs < 10.0);
  }
}

TEST_CASE("corrupted multiplication is named") {
  TableMonad T = tabulate(*powerset_monad(), {0, 1, 2});
  T.mult_of[2][5] = (T.mult_of[2][5] + 1) % 4;
  auto r = monad_law_check(T, {0, 1, 2});
  REQUIRE_FALSE(r.ok);
  bool named = false;
  for (auto& v : r.violations) named = named || v.find("element 5") != std::string::npos;
  CHECK(named);
}

TEST_CASE("table monad json round trip") {
  TableMonad T = tabulate(*maybe_monad(), {0, 1, 2});
  json j = table_monad_to_json(T);
  TableMonad U = table_monad_from_json(j);
  CHECK(dump_stable(table_monad_to_json(U)) == dump_stable(j));
  CHECK(monad_law_check(U, {0, 1, 2}).ok);
  j["mult"]["1"] = Fn{0};
  CHECK_THROWS_AS(table_monad_from_json(j), StructureError);
}

TEST_CASE("writer over the trivial monoid behaves as the identity") {
  auto W = writer_monad(trivial_monoid());
  auto I = identity_monad();
  for (int n = 0; n <= 3; ++n) {
    CHECK(W->size({1, n}) == I->size({1, n}));
    CHECK(W->unit_table({0, n}) == I->unit_table({0, n}));
    CHECK(W->mult_table({0, n}) == I->mult_table({0, n}));
  }
}

TEST_CASE("r_product_map lands in the affine part") {
  FiniteRing R = integers_mod(2);
  Fn p = r_product_map(R, 2, 2);
  for (int v : p) CHECK(v >= 0);
  auto Ra = affine_span_monad(R);
  // Diracs go to Diracs.
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      CHECK(p[Ra->unit({0, 2}, x) * 2 + Ra->unit({0, 2}, y)] == Ra->unit({0, 4}, x * 2 + y));
}
