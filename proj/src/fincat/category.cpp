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

#include "ck/fincat/category.hpp"

#include <stdexcept>

#include "ck/common.hpp"

namespace ck {

FinCategory FinCategory::build(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                               std::vector<Id> identities,
                               const std::function<Id(Id, Id)>& compose) {
  const size_t m = morphisms.size();
  std::vector<Id> table(m * m, -1);
  for (size_t g = 0; g < m; ++g)
    for (size_t f = 0; f < m; ++f)
      if (morphisms[f].tgt == morphisms[g].src)
        table[g * m + f] = compose(static_cast<Id>(g), static_cast<Id>(f));
  return from_table(std::move(objects), std::move(morphisms), std::move(identities),
                    std::move(table));
}

FinCategory FinCategory::from_table(std::vector<std::string> objects,
                                    std::vector<Morphism> morphisms, std::vector<Id> identities,
                                    std::vector<Id> table) {
  if (identities.size() != objects.size())
    throw StructureError("identity list does not match object list");
  if (table.size() != morphisms.size() * morphisms.size())
    throw StructureError("composition table has wrong size");
  FinCategory c;
  c.objects_ = std::move(objects);
  c.morphisms_ = std::move(morphisms);
  c.identities_ = std::move(identities);
  c.table_ = std::move(table);
  c.index();
  return c;
}

void FinCategory::index() {
  const size_t n = objects_.size();
  hom_.assign(n * n, {});
  for (size_t f = 0; f < morphisms_.size(); ++f) {
    const auto& mf = morphisms_[f];
    if (mf.src < 0 || mf.tgt < 0 || static_cast<size_t>(mf.src) >= n ||
        static_cast<size_t>(mf.tgt) >= n)
      throw StructureError("morphism " + mf.name + " has an endpoint outside the object list");
    hom_[mf.src * n + mf.tgt].push_back(static_cast<Id>(f));
    morphism_index_[mf.name] = static_cast<Id>(f);
  }
  for (size_t o = 0; o < n; ++o) object_index_[objects_[o]] = static_cast<Id>(o);
}

std::optional<Id> FinCategory::find_object(const std::string& name) const {
  auto it = object_index_.find(name);
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<Id> FinCategory::find_morphism(const std::string& name) const {
  auto it = morphism_index_.find(name);
  if (it == morphism_index_.end()) return std::nullopt;
  return it->second;
}

ValidationReport validate_category(const FinCategory& c) {
  ValidationReport r;
  const int m = c.num_morphisms();
  const int n = c.num_objects();
  if (static_cast<int>(c.objects().size()) != n) r.fail("object count mismatch");
  for (int o = 0; o < n; ++o) {
    Id e = c.identity(o);
    if (e < 0 || e >= m || c.src(e) != o || c.tgt(e) != o)
      r.fail("identity of " + c.object_name(o) + " is not an endomorphism of it");
  }
  if (!r.ok) return r;
  for (int g = 0; g < m; ++g) {
    for (int f = 0; f < m; ++f) {
      const bool composable = c.tgt(f) == c.src(g);
      const Id h = c.compose(g, f);
      if (!composable) {
        if (h != -1)
          r.fail("composite defined on non-composable pair (" + c.morphism(g).name + ", " +
                 c.morphism(f).name + ")");
        continue;
      }
      if (h < 0 || h >= m) {
        r.fail("composite undefined on composable pair (" + c.morphism(g).name + ", " +
               c.morphism(f).name + ")");
        continue;
      }
      if (c.src(h) != c.src(f) || c.tgt(h) != c.tgt(g))
        r.fail("composite " + c.morphism(g).name + "." + c.morphism(f).name +
               " has wrong endpoints");
    }
  }
  if (!r.ok) return r;
  for (int f = 0; f < m; ++f) {
    if (c.compose(c.identity(c.tgt(f)), f) != f)
      r.fail("left unit fails at " + c.morphism(f).name);
    if (c.compose(f, c.identity(c.src(f))) != f)
      r.fail("right unit fails at " + c.morphism(f).name);
  }
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      if (c.src(g) != c.tgt(f)) continue;
      const Id gf = c.compose(g, f);
      for (int h = 0; h < m; ++h) {
        if (c.src(h) != c.tgt(g)) continue;
        if (c.compose(h, gf) != c.compose(c.compose(h, g), f))
          r.fail("associativity fails at (" + c.morphism(h).name + ", " + c.morphism(g).name +
                 ", " + c.morphism(f).name + ")");
      }
    }
  return r;
}

ValidationReport validate_functor(const FinFunctor& F) {
  ValidationReport r;
  const auto& A = *F.dom;
  const auto& B = *F.cod;
  if (static_cast<int>(F.on_objects.size()) != A.num_objects() ||
      static_cast<int>(F.on_morphisms.size()) != A.num_morphisms()) {
    r.fail("functor tables do not match the domain");
    return r;
  }
  for (int f = 0; f < A.num_morphisms(); ++f) {
    Id Ff = F.on_morphisms[f];
    if (Ff < 0 || Ff >= B.num_morphisms()) {
      r.fail("image of " + A.morphism(f).name + " is not a morphism");
      continue;
    }
    if (B.src(Ff) != F.on_objects[A.src(f)] || B.tgt(Ff) != F.on_objects[A.tgt(f)])
      r.fail("image of " + A.morphism(f).name + " has wrong endpoints");
  }
  if (!r.ok) return r;
  for (int o = 0; o < A.num_objects(); ++o)
    if (F.on_morphisms[A.identity(o)] != B.identity(F.on_objects[o]))
      r.fail("identity of " + A.object_name(o) + " not preserved");
  for (int g = 0; g < A.num_morphisms(); ++g)
    for (int f = 0; f < A.num_morphisms(); ++f) {
      if (A.tgt(f) != A.src(g)) continue;
      if (F.on_morphisms[A.compose(g, f)] != B.compose(F.on_morphisms[g], F.on_morphisms[f]))
        r.fail("composition not preserved at (" + A.morphism(g).name + ", " +
               A.morphism(f).name + ")");
    }
  return r;
}

FinFunctor identity_functor(const CatPtr& c) {
  FinFunctor F{c, c, {}, {}};
  for (int o = 0; o < c->num_objects(); ++o) F.on_objects.push_back(o);
  for (int f = 0; f < c->num_morphisms(); ++f) F.on_morphisms.push_back(f);
  return F;
}

FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f) {
  if (f.cod.get() != g.dom.get() && f.cod->num_objects() != g.dom->num_objects())
    throw StructureError("functors are not composable");
  FinFunctor h{f.dom, g.cod, {}, {}};
  for (Id o : f.on_objects) h.on_objects.push_back(g.on_objects[o]);
  for (Id m : f.on_morphisms) h.on_morphisms.push_back(g.on_morphisms[m]);
  return h;
}

FinFunctor constant_functor(const CatPtr& dom, const CatPtr& cod, Id object) {
  FinFunctor F{dom, cod, std::vector<Id>(dom->num_objects(), object),
               std::vector<Id>(dom->num_morphisms(), cod->identity(object))};
  return F;
}

bool functors_equal(const FinFunctor& a, const FinFunctor& b) {
  return a.on_objects == b.on_objects && a.on_morphisms == b.on_morphisms;
}

ValidationReport validate_nat(const NatTransf& t) {
  ValidationReport r;
  const auto& A = *t.source.dom;
  const auto& B = *t.source.cod;
  if (static_cast<int>(t.components.size()) != A.num_objects()) {
    r.fail("component list does not match the domain");
    return r;
  }
  for (int o = 0; o < A.num_objects(); ++o) {
    Id c = t.components[o];
    if (c < 0 || c >= B.num_morphisms() || B.src(c) != t.source.on_objects[o] ||
        B.tgt(c) != t.target.on_objects[o])
      r.fail("component at " + A.object_name(o) + " has wrong endpoints");
  }
  if (!r.ok) return r;
  for (int f = 0; f < A.num_morphisms(); ++f) {
    Id lhs = B.compose(t.target.on_morphisms[f], t.components[A.src(f)]);
    Id rhs = B.compose(t.components[A.tgt(f)], t.source.on_morphisms[f]);
    if (lhs != rhs) r.fail("naturality square fails at " + A.morphism(f).name);
  }
  return r;
}

FinCategory terminal_category() {
  return FinCategory::build({"*"}, {{"id_*", 0, 0}}, {0}, [](Id, Id) { return 0; });
}

FinCategory empty_category() { return FinCategory::build({}, {}, {}, [](Id, Id) { return -1; }); }

FinCategory discrete_category(int n) {
  std::vector<std::string> objs;
  std::vector<Morphism> mors;
  std::vector<Id> ids;
  for (int i = 0; i < n; ++i) {
    objs.push_back("x" + std::to_string(i));
    mors.push_back({"id_x" + std::to_string(i), i, i});
    ids.push_back(i);
  }
  return FinCategory::build(objs, mors, ids, [](Id g, Id) { return g; });
}

FinCategory poset_category(const std::vector<std::string>& names,
                           const std::vector<std::vector<bool>>& leq) {
  const int n = static_cast<int>(names.size());
  std::vector<Morphism> mors;
  std::vector<std::vector<Id>> index(n, std::vector<Id>(n, -1));
  std::vector<Id> ids(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (leq[i][j]) {
        index[i][j] = static_cast<Id>(mors.size());
        mors.push_back({i == j ? "id_" + names[i] : names[i] + "<=" + names[j], i, j});
        if (i == j) ids[i] = index[i][j];
      }
  return FinCategory::build(names, mors, ids, [&](Id g, Id f) {
    Id r = index[mors[f].src][mors[g].tgt];
    if (r < 0) throw StructureError("relation is not transitive");
    return r;
  });
}

FinCategory chain_poset(const std::vector<std::string>& names) {
  const size_t n = names.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) leq[i][j] = true;
  return poset_category(names, leq);
}

FinCategory arrow_category() {
  return FinCategory::build({"0", "1"}, {{"id0", 0, 0}, {"id1", 1, 1}, {"d", 0, 1}}, {0, 1},
                            [](Id g, Id f) {
                              if (g == 2) return 2;
                              if (f == 2) return 2;
                              return g;
                            });
}

FinCategory cyclic_group(int n) {
  std::vector<Morphism> mors;
  for (int k = 0; k < n; ++k) mors.push_back({k == 0 ? "e" : "g" + std::to_string(k), 0, 0});
  return FinCategory::build({"*"}, mors, {0}, [n](Id g, Id f) { return (g + f) % n; });
}

FinCategory opposite(const FinCategory& c) {
  std::vector<Morphism> mors;
  for (const auto& m : c.morphisms()) mors.push_back({m.name + "^op", m.tgt, m.src});
  return FinCategory::build(c.objects(), mors, c.identities(),
                            [&](Id g, Id f) { return c.compose(f, g); });
}

FinCategory product(const FinCategory& a, const FinCategory& b) {
  const int na = a.num_objects(), nb = b.num_objects();
  const int ma = a.num_morphisms(), mb = b.num_morphisms();
  std::vector<std::string> objs;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) objs.push_back("(" + a.object_name(i) + "," + b.object_name(j) + ")");
  std::vector<Morphism> mors;
  for (int f = 0; f < ma; ++f)
    for (int g = 0; g < mb; ++g)
      mors.push_back({"(" + a.morphism(f).name + "," + b.morphism(g).name + ")",
                      a.src(f) * nb + b.src(g), a.tgt(f) * nb + b.tgt(g)});
  std::vector<Id> ids;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) ids.push_back(a.identity(i) * mb + b.identity(j));
  return FinCategory::build(objs, mors, ids, [&](Id g, Id f) {
    return a.compose(g / mb, f / mb) * mb + b.compose(g % mb, f % mb);
  });
}

Subcategory full_subcategory(const CatPtr& c, const std::vector<Id>& objects) {
  std::vector<Id> pos(c->num_objects(), -1);
  std::vector<std::string> names;
  for (size_t i = 0; i < objects.size(); ++i) {
    pos[objects[i]] = static_cast<Id>(i);
    names.push_back(c->object_name(objects[i]));
  }
  std::vector<Morphism> mors;
  std::vector<Id> back;
  std::vector<Id> sub_of(c->num_morphisms(), -1);
  for (int f = 0; f < c->num_morphisms(); ++f) {
    if (pos[c->src(f)] < 0 || pos[c->tgt(f)] < 0) continue;
    sub_of[f] = static_cast<Id>(mors.size());
    mors.push_back({c->morphism(f).name, pos[c->src(f)], pos[c->tgt(f)]});
    back.push_back(f);
  }
  std::vector<Id> ids;
  for (Id o : objects) ids.push_back(sub_of[c->identity(o)]);
  auto sub = share(FinCategory::build(names, mors, ids, [&](Id g, Id f) {
    return sub_of[c->compose(back[g], back[f])];
  }));
  FinFunctor inc{sub, c, objects, back};
  return {sub, inc};
}

}  // namespace ck
