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

#include "ck/monadkit/sketch.hpp"

#include "ck/fincat/concrete.hpp"
#include "ck/fincat/ordinal.hpp"
#include "ck/monadkit/programs.hpp"

namespace ck {
namespace {

Id morphism_named(const FinCategory& c, const std::string& name) {
  auto m = c.find_morphism(name);
  if (!m) throw StructureError("sketch: no morphism " + name);
  return *m;
}

std::string fn_name(int a, int b, const Fn& f) {
  return std::to_string(a) + ">" + std::to_string(b) + ":" + join_ints(f);
}

}  // namespace

CofinalityWitness cobar_cofinality_witness(const Monad& M) {
  static const FinSetCategory finset;
  std::vector<int> sz;
  for (int k = 0; k <= 3; ++k) sz.push_back(M.checked_size(M.power(0, k)));
  if (sz[1] == sz[2] || sz[2] == sz[3] || sz[1] == sz[3])
    throw StructureError("sketch needs distinct sizes of T^k(0)");

  CofinalityWitness w;
  auto C = share(simplex_category(SimplexKind::Delta, 1, 2));
  auto Cbig = share(simplex_category(SimplexKind::Delta, 1, 3));
  auto D = materialize(finset, {sz[1], sz[2]}).cat;
  auto Dbig = materialize(finset, {sz[1], sz[2], sz[3]}).cat;
  ProgramEvaluator ev(M, 0);

  auto cobar_functor = [&](const CatPtr& dom, const CatPtr& cod) {
    FinFunctor F{dom, cod, {}, {}};
    for (Id o = 0; o < dom->num_objects(); ++o) F.on_objects.push_back(o);
    for (const OrdMap& f : simplex_category_maps(*dom))
      F.on_morphisms.push_back(
          morphism_named(*cod, fn_name(sz[f.dom], sz[f.cod], ev.run(phi_program(f), f.dom))));
    return F;
  };
  w.F = cobar_functor(C, D);
  w.Fbig = cobar_functor(Cbig, Dbig);

  auto inclusion = [](const CatPtr& small, const CatPtr& big) {
    FinFunctor I{small, big, {}, {}};
    for (Id o = 0; o < small->num_objects(); ++o) I.on_objects.push_back(o);
    for (const auto& m : small->morphisms()) I.on_morphisms.push_back(morphism_named(*big, m.name));
    return I;
  };
  w.incC = inclusion(C, Cbig);
  w.incD = inclusion(D, Dbig);

  // Phi = [0] * -.
  w.Phi = FinFunctor{C, Cbig, {}, {}};
  for (Id o = 0; o < C->num_objects(); ++o) w.Phi.on_objects.push_back(o + 1);
  for (const OrdMap& f : simplex_category_maps(*C))
    w.Phi.on_morphisms.push_back(morphism_named(*Cbig, ordinal_join(ord_identity(1), f).str()));
  // Psi = T on morphisms of D.
  w.Psi = FinFunctor{D, Dbig, {1, 2}, {}};
  for (const auto& m : D->morphisms()) {
    const int a = sz[m.src + 1], b = sz[m.tgt + 1];
    const std::string vals = m.name.substr(m.name.find(':') + 1);
    Fn f;
    for (size_t p = 0; p < vals.size();) {
      size_t q = vals.find(',', p);
      if (q == std::string::npos) q = vals.size();
      f.push_back(std::stoi(vals.substr(p, q - p)));
      p = q + 1;
    }
    w.Psi.on_morphisms.push_back(morphism_named(
        *Dbig, fn_name(sz[m.src + 2], sz[m.tgt + 2], M.fmap_table(M.base(a), M.base(b), f))));
  }

  w.c0 = 0;
  for (Id o = 0; o < C->num_objects(); ++o) {
    const int k = o + 1;
    Fn first{0}, last;
    for (int i = 0; i < k; ++i) last.push_back(i + 1);
    w.sigma.push_back(morphism_named(*Cbig, OrdMap{1, k + 1, first}.str()));
    w.xi.push_back(morphism_named(*Cbig, OrdMap{k, k + 1, last}.str()));
  }
  for (Id o = 0; o < D->num_objects(); ++o) {
    const int d = sz[o + 1];
    w.tau.push_back(morphism_named(*Dbig, fn_name(sz[1], sz[o + 2], M.fmap_table(M.base(0), M.base(d), {}))));
    w.zeta.push_back(morphism_named(*Dbig, fn_name(d, sz[o + 2], M.unit_table(M.base(d)))));
  }
  return w;
}

}  // namespace ck
