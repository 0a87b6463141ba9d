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

#include "ck/kan/cofinality.hpp"

#include <numeric>

#include "ck/common.hpp"

namespace ck {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

InitialityReport is_initial_functor(const FinFunctor& F) {
  const FinCategory& J = *F.dom;
  const FinCategory& K = *F.cod;
  InitialityReport r;
  r.initial = true;
  for (int d = 0; d < K.num_objects(); ++d) {
    std::vector<std::pair<Id, Id>> objs;  // (j, u: F j -> d)
    std::vector<std::vector<int>> at(J.num_objects());
    for (int j = 0; j < J.num_objects(); ++j)
      for (Id u : K.hom(F.on_objects[j], d)) {
        at[j].push_back(static_cast<int>(objs.size()));
        objs.push_back({j, u});
      }
    std::vector<int> parent(objs.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (int t = 0; t < J.num_morphisms(); ++t) {
      Id Ft = F.on_morphisms[t];
      for (int a : at[J.src(t)])
        for (int b : at[J.tgt(t)])
          if (K.compose(objs[b].second, Ft) == objs[a].second)
            parent[find_root(parent, a)] = find_root(parent, b);
    }
    int comps = 0;
    for (size_t a = 0; a < objs.size(); ++a) comps += find_root(parent, static_cast<int>(a)) == static_cast<int>(a);
    r.comma_objects.push_back(static_cast<int>(objs.size()));
    r.components.push_back(comps);
    if (objs.empty()) {
      r.initial = false;
      r.failures.push_back("comma category over " + K.object_name(d) + " is empty");
    } else if (comps != 1) {
      r.initial = false;
      r.failures.push_back("comma category over " + K.object_name(d) + " has " +
                           std::to_string(comps) + " components");
    }
  }
  return r;
}

WitnessReport cofinality_witness_check(const CofinalityWitness& w) {
  WitnessReport r;
  auto fail = [&](const std::string& s) { r.failures.push_back(s); };
  auto shape = [&](const FinFunctor& f, const CatPtr& dom, const CatPtr& cod, const char* name) {
    if (f.dom != dom || f.cod != cod) throw StructureError(std::string(name) + " has mismatched domains");
    auto v = validate_functor(f);
    for (auto& s : v.violations) fail(std::string(name) + ": " + s);
  };
  const CatPtr C = w.F.dom, D = w.F.cod, C2 = w.Fbig.dom, D2 = w.Fbig.cod;
  shape(w.F, C, D, "F");
  shape(w.Fbig, C2, D2, "Fbig");
  shape(w.incC, C, C2, "C inclusion");
  shape(w.incD, D, D2, "D inclusion");
  shape(w.Phi, C, C2, "Phi");
  shape(w.Psi, D, D2, "Psi");
  if (w.sigma.size() != static_cast<size_t>(C->num_objects()) || w.xi.size() != w.sigma.size() ||
      w.tau.size() != static_cast<size_t>(D->num_objects()) || w.zeta.size() != w.tau.size())
    throw StructureError("transformation components do not match the categories");
  if (!r.failures.empty()) return r;

  if (!functors_equal(compose_functors(w.Fbig, w.incC), compose_functors(w.incD, w.F)))
    fail("Fbig does not extend F");
  if (!functors_equal(compose_functors(w.Psi, w.F), compose_functors(w.Fbig, w.Phi)))
    fail("square Psi F = F Phi does not commute");

  auto nat = [&](const FinFunctor& s, const FinFunctor& t, const std::vector<Id>& comp, const char* name) {
    auto v = validate_nat({s, t, comp});
    for (auto& x : v.violations) fail(std::string(name) + ": " + x);
  };
  const Id d0 = w.F.on_objects[w.c0];
  nat(constant_functor(C, C2, w.incC.on_objects[w.c0]), w.Phi, w.sigma, "sigma");
  nat(w.incC, w.Phi, w.xi, "xi");
  nat(constant_functor(D, D2, w.incD.on_objects[d0]), w.Psi, w.tau, "tau");
  nat(w.incD, w.Psi, w.zeta, "zeta");
  if (!r.failures.empty()) return r;

  for (int c = 0; c < C->num_objects(); ++c) {
    Id Fc = w.F.on_objects[c];
    if (w.tau[Fc] != w.Fbig.on_morphisms[w.sigma[c]])
      fail("tau F != F sigma at " + C->object_name(c));
    if (w.zeta[Fc] != w.Fbig.on_morphisms[w.xi[c]])
      fail("zeta F != F xi at " + C->object_name(c));
  }
  for (int d = 0; d < D->num_objects(); ++d) {
    Id z = w.zeta[d];
    Id src = D2->src(z), tgt = D2->tgt(z);
    bool inv = false;
    for (Id q : D2->hom(tgt, src))
      if (D2->compose(q, z) == D2->identity(src)) inv = true;
    if (!inv) fail("zeta is not left invertible at " + D->object_name(d));
  }
  r.ok = r.failures.empty();
  r.conclusion = is_initial_functor(w.F);
  return r;
}

}  // namespace ck
