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

#include "ck/fincat/constructions.hpp"

#include <map>
#include <set>

#include "ck/common.hpp"

namespace ck {

CommaResult comma_under(const CatPtr& Cp, const std::vector<Id>& D, Id c) {
  const FinCategory& C = *Cp;
  if (c < 0 || c >= C.num_objects()) throw StructureError("object not in category");
  std::vector<std::string> objs;
  std::vector<Id> obj_mor;
  std::map<Id, Id> obj_of_mor;
  for (Id d : D)
    for (Id f : C.hom(c, d)) {
      obj_of_mor[f] = static_cast<Id>(objs.size());
      objs.push_back(C.morphism(f).name);
      obj_mor.push_back(f);
    }
  std::vector<Morphism> mors;
  std::vector<Id> mor_of;
  std::map<std::tuple<Id, Id, Id>, Id> index;  // (src obj, tgt obj, h)
  for (size_t a = 0; a < obj_mor.size(); ++a)
    for (size_t b = 0; b < obj_mor.size(); ++b) {
      Id f = obj_mor[a], g = obj_mor[b];
      for (Id h : C.hom(C.tgt(f), C.tgt(g))) {
        if (C.compose(h, f) != g) continue;
        index[{static_cast<Id>(a), static_cast<Id>(b), h}] = static_cast<Id>(mors.size());
        mors.push_back({C.morphism(h).name + "|" + C.morphism(f).name, static_cast<Id>(a),
                        static_cast<Id>(b)});
        mor_of.push_back(h);
      }
    }
  std::vector<Id> ids;
  for (size_t a = 0; a < obj_mor.size(); ++a)
    ids.push_back(index.at({static_cast<Id>(a), static_cast<Id>(a),
                            C.identity(C.tgt(obj_mor[a]))}));
  auto cat = share(FinCategory::build(objs, mors, ids, [&](Id g, Id f) {
    return index.at({mors[f].src, mors[g].tgt, C.compose(mor_of[g], mor_of[f])});
  }));
  FinFunctor proj{cat, Cp, {}, mor_of};
  for (Id f : obj_mor) proj.on_objects.push_back(C.tgt(f));
  return {cat, proj, obj_mor, mor_of};
}

TwistedArrow twisted_arrow(const CatPtr& Cp) {
  const FinCategory& C = *Cp;
  const int m = C.num_morphisms();
  std::vector<std::string> objs;
  for (int f = 0; f < m; ++f) objs.push_back(C.morphism(f).name);
  std::vector<Morphism> mors;
  std::vector<std::pair<Id, Id>> pairs;
  std::map<std::tuple<Id, Id, Id, Id>, Id> index;  // (alpha, alpha', g0, g1)
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (Id g0 : C.hom(C.src(a), C.src(b)))
        for (Id g1 : C.hom(C.tgt(b), C.tgt(a))) {
          if (C.compose(g1, C.compose(b, g0)) != a) continue;
          index[{a, b, g0, g1}] = static_cast<Id>(mors.size());
          mors.push_back({"(" + C.morphism(g0).name + "," + C.morphism(g1).name + "):" +
                              C.morphism(a).name + "->" + C.morphism(b).name,
                          a, b});
          pairs.push_back({g0, g1});
        }
  std::vector<Id> ids;
  for (int a = 0; a < m; ++a)
    ids.push_back(index.at({a, a, C.identity(C.src(a)), C.identity(C.tgt(a))}));
  // (g0,g1): alpha -> alpha', (d0,d1): alpha' -> alpha''  gives (d0 g0, g1 d1).
  auto tw = share(FinCategory::build(objs, mors, ids, [&](Id g, Id f) {
    auto [f0, f1] = pairs[f];
    auto [g0, g1] = pairs[g];
    return index.at({mors[f].src, mors[g].tgt, C.compose(g0, f0), C.compose(f1, g1)});
  }));
  auto op = share(opposite(C));
  FinFunctor p{tw, Cp, {}, {}};
  FinFunctor q{tw, op, {}, {}};
  for (int a = 0; a < m; ++a) {
    p.on_objects.push_back(C.src(a));
    q.on_objects.push_back(C.tgt(a));
  }
  for (auto& [g0, g1] : pairs) {
    p.on_morphisms.push_back(g0);
    q.on_morphisms.push_back(g1);  // g1: tgt(alpha') -> tgt(alpha) is tgt(alpha) -> tgt(alpha') in C^op
  }
  return {tw, op, p, q, pairs};
}

SliceResult slice_over(const CatPtr& Cp, Id c) {
  const FinCategory& C = *Cp;
  std::vector<std::string> objs;
  std::vector<Id> obj_mor;
  for (int f = 0; f < C.num_morphisms(); ++f)
    if (C.tgt(f) == c) {
      objs.push_back(C.morphism(f).name);
      obj_mor.push_back(f);
    }
  std::vector<Morphism> mors;
  std::vector<Id> mor_of;
  std::map<std::tuple<Id, Id, Id>, Id> index;
  for (size_t a = 0; a < obj_mor.size(); ++a)
    for (size_t b = 0; b < obj_mor.size(); ++b)
      for (Id h : C.hom(C.src(obj_mor[a]), C.src(obj_mor[b]))) {
        if (C.compose(obj_mor[b], h) != obj_mor[a]) continue;
        index[{static_cast<Id>(a), static_cast<Id>(b), h}] = static_cast<Id>(mors.size());
        mors.push_back({C.morphism(h).name + "/" + C.morphism(obj_mor[a]).name,
                        static_cast<Id>(a), static_cast<Id>(b)});
        mor_of.push_back(h);
      }
  std::vector<Id> ids;
  for (size_t a = 0; a < obj_mor.size(); ++a)
    ids.push_back(index.at({static_cast<Id>(a), static_cast<Id>(a),
                            C.identity(C.src(obj_mor[a]))}));
  auto cat = share(FinCategory::build(objs, mors, ids, [&](Id g, Id f) {
    return index.at({mors[f].src, mors[g].tgt, C.compose(mor_of[g], mor_of[f])});
  }));
  return {cat, obj_mor, mor_of};
}

OverFiber over_fiber(const CatPtr& Cp, Id c) {
  const FinCategory& C = *Cp;
  TwistedArrow T = twisted_arrow(Cp);
  std::vector<Id> keep_obj;
  for (int a = 0; a < C.num_morphisms(); ++a)
    if (C.tgt(a) == c) keep_obj.push_back(a);
  std::vector<Id> pos(C.num_morphisms(), -1);
  std::vector<std::string> objs;
  for (size_t i = 0; i < keep_obj.size(); ++i) {
    pos[keep_obj[i]] = static_cast<Id>(i);
    objs.push_back(C.morphism(keep_obj[i]).name);
  }
  std::vector<Morphism> mors;
  std::vector<Id> back;
  std::vector<Id> sub_of(T.tw->num_morphisms(), -1);
  std::vector<std::pair<Id, Id>> pairs;
  for (int f = 0; f < T.tw->num_morphisms(); ++f) {
    Id s = T.tw->src(f), t = T.tw->tgt(f);
    if (pos[s] < 0 || pos[t] < 0) continue;
    if (T.pairs[f].second != C.identity(c)) continue;
    sub_of[f] = static_cast<Id>(mors.size());
    mors.push_back({T.tw->morphism(f).name, pos[s], pos[t]});
    back.push_back(f);
    pairs.push_back(T.pairs[f]);
  }
  std::vector<Id> ids;
  for (Id a : keep_obj) ids.push_back(sub_of[T.tw->identity(a)]);
  auto fiber = share(FinCategory::build(objs, mors, ids, [&](Id g, Id f) {
    Id r = sub_of[T.tw->compose(back[g], back[f])];
    if (r < 0) throw std::logic_error("fiber not closed under composition");
    return r;
  }));

  OverFiber out;
  out.fiber = fiber;
  out.pairs = pairs;
  out.slice = slice_over(Cp, c);
  // Comparison: alpha |-> alpha, h |-> (h, id_c).
  FinFunctor cmp{out.slice.cat, fiber, {}, {}};
  for (Id a : out.slice.object_morphism) cmp.on_objects.push_back(pos[a]);
  for (int h = 0; h < out.slice.cat->num_morphisms(); ++h) {
    Id s = cmp.on_objects[out.slice.cat->src(h)];
    Id t = cmp.on_objects[out.slice.cat->tgt(h)];
    Id found = -1;
    for (int k = 0; k < fiber->num_morphisms(); ++k)
      if (fiber->src(k) == s && fiber->tgt(k) == t && pairs[k].first == out.slice.morphism_of[h])
        found = k;
    cmp.on_morphisms.push_back(found);
  }
  out.comparison = cmp;
  std::set<Id> objs_hit(cmp.on_objects.begin(), cmp.on_objects.end());
  std::set<Id> mors_hit(cmp.on_morphisms.begin(), cmp.on_morphisms.end());
  out.comparison_bijective =
      validate_functor(cmp).ok &&
      static_cast<int>(objs_hit.size()) == fiber->num_objects() &&
      static_cast<int>(cmp.on_objects.size()) == fiber->num_objects() &&
      static_cast<int>(mors_hit.size()) == fiber->num_morphisms() &&
      static_cast<int>(cmp.on_morphisms.size()) == fiber->num_morphisms() && !mors_hit.count(-1);
  return out;
}

}  // namespace ck
