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

#include "ck/bkshadow/ring.hpp"

#include <regex>

namespace ck {

int FiniteRing::neg(int a) const {
  for (int b = 0; b < size(); ++b)
    if (add[a][b] == zero) return b;
  throw StructureError("element without additive inverse in " + name);
}

FiniteRing integers_mod(int n) {
  if (n < 2) throw StructureError("Z/n needs n >= 2");
  FiniteRing R;
  R.name = "Z/" + std::to_string(n);
  R.add.assign(n, std::vector<int>(n));
  R.mul.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    R.elements.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) {
      R.add[a][b] = (a + b) % n;
      R.mul[a][b] = (a * b) % n;
    }
  }
  R.zero = 0;
  R.one = 1;
  return R;
}

FiniteRing ring_from_json(const json& j) {
  try {
    FiniteRing R;
    R.name = j.value("name", std::string("table ring"));
    R.elements = j.at("elements").get<std::vector<std::string>>();
    R.add = j.at("add").get<std::vector<std::vector<int>>>();
    R.mul = j.at("mul").get<std::vector<std::vector<int>>>();
    R.zero = j.value("zero", 0);
    R.one = j.value("one", 1);
    auto v = validate_ring(R);
    if (!v.ok) throw StructureError("ring table invalid: " + v.violations.front());
    return R;
  } catch (const json::exception& e) {
    throw StructureError(std::string("ring file: ") + e.what());
  }
}

FiniteRing parse_ring(const std::string& spec) {
  std::smatch m;
  static const std::regex zn(R"(Z/(\d+))");
  if (std::regex_match(spec, m, zn)) return integers_mod(std::stoi(m[1]));
  return ring_from_json(read_json_file(spec));
}

ValidationReport validate_ring(const FiniteRing& R) {
  ValidationReport r;
  const int q = R.size();
  if (q == 0 || static_cast<int>(R.add.size()) != q || static_cast<int>(R.mul.size()) != q) {
    r.fail("tables do not match the element list");
    return r;
  }
  for (int a = 0; a < q; ++a)
    if (static_cast<int>(R.add[a].size()) != q || static_cast<int>(R.mul[a].size()) != q) {
      r.fail("tables are not square");
      return r;
    }
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      if (R.add[a][b] < 0 || R.add[a][b] >= q || R.mul[a][b] < 0 || R.mul[a][b] >= q) {
        r.fail("table entry out of range");
        return r;
      }
  auto nm = [&](int a) { return R.elements[a]; };
  for (int a = 0; a < q; ++a) {
    if (R.add[R.zero][a] != a) r.fail("zero is not additive unit at " + nm(a));
    if (R.mul[R.one][a] != a) r.fail("one is not multiplicative unit at " + nm(a));
    bool has_neg = false;
    for (int b = 0; b < q; ++b) {
      has_neg = has_neg || R.add[a][b] == R.zero;
      if (R.add[a][b] != R.add[b][a]) r.fail("addition not commutative at " + nm(a) + "," + nm(b));
      if (R.mul[a][b] != R.mul[b][a]) r.fail("multiplication not commutative at " + nm(a) + "," + nm(b));
      for (int c = 0; c < q; ++c) {
        if (R.add[R.add[a][b]][c] != R.add[a][R.add[b][c]]) r.fail("addition not associative");
        if (R.mul[R.mul[a][b]][c] != R.mul[a][R.mul[b][c]]) r.fail("multiplication not associative");
        if (R.mul[a][R.add[b][c]] != R.add[R.mul[a][b]][R.mul[a][c]]) r.fail("distributivity fails");
      }
    }
    if (!has_neg) r.fail("no additive inverse for " + nm(a));
  }
  return r;
}

FiniteMonoid additive_monoid(int n) {
  FiniteMonoid M;
  M.name = "Z/" + std::to_string(n);
  M.op.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) M.op[a][b] = (a + b) % n;
  M.unit = 0;
  return M;
}

FiniteMonoid trivial_monoid() { return additive_monoid(1); }

ValidationReport validate_monoid(const FiniteMonoid& M) {
  ValidationReport r;
  const int k = M.size();
  for (int a = 0; a < k; ++a) {
    if (M.op[M.unit][a] != a || M.op[a][M.unit] != a) r.fail("unit law fails");
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        if (M.op[M.op[a][b]][c] != M.op[a][M.op[b][c]]) r.fail("monoid not associative");
  }
  return r;
}

}  // namespace ck
