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

#include "ck/fincat/concrete.hpp"

namespace ck {

Fn compose_fn(const Fn& g, const Fn& f) {
  Fn h(f.size());
  for (size_t i = 0; i < f.size(); ++i) h[i] = g[f[i]];
  return h;
}

Fn identity_fn(int n) {
  Fn f(n);
  for (int i = 0; i < n; ++i) f[i] = i;
  return f;
}

const ConcreteCategory::HomData& ConcreteCategory::data(int a, int b) const {
  auto key = std::make_pair(a, b);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  HomData d;
  d.fns = enumerate_hom(a, b);
  for (size_t i = 0; i < d.fns.size(); ++i) d.index.emplace(d.fns[i], static_cast<int>(i));
  return cache_.emplace(key, std::move(d)).first->second;
}

const std::vector<Fn>& ConcreteCategory::hom(int a, int b) const { return data(a, b).fns; }

std::optional<int> ConcreteCategory::find(int a, int b, const Fn& fn) const {
  const auto& d = data(a, b);
  auto it = d.index.find(fn);
  if (it == d.index.end()) return std::nullopt;
  return it->second;
}

int ConcreteCategory::compose_index(int a, int b, int c, int g, int f) const {
  Fn h = compose_fn(hom(b, c)[g], hom(a, b)[f]);
  auto idx = find(a, c, h);
  if (!idx) throw StructureError("composite is not a morphism of " + name());
  return *idx;
}

int ConcreteCategory::identity_index(int a) const {
  auto idx = find(a, a, identity_fn(underlying_size(a)));
  if (!idx) throw StructureError("identity missing in " + name());
  return *idx;
}

std::vector<Fn> FinSetCategory::enumerate_hom(int a, int b) const {
  if (ipow(b, a) > guard_limit())
    throw ResourceError("hom(" + std::to_string(a) + "," + std::to_string(b) +
                        ") in FinSet exceeds the guard");
  return all_functions(a, b);
}

std::vector<Fn> FinVectCategory::enumerate_hom(int a, int b) const {
  // Matrices b x a over F_p, column j is the image of the j-th basis vector.
  const int na = underlying_size(a), nb = underlying_size(b);
  if (ipow(p_, a * b) > guard_limit()) throw ResourceError("FinVect hom exceeds the guard");
  std::vector<Fn> out;
  std::vector<int> cols(a, 0);
  auto add = [&](int x, int y) {
    int r = 0, mul = 1;
    for (int k = 0; k < b; ++k) {
      r += ((x % p_ + y % p_) % p_) * mul;
      x /= p_;
      y /= p_;
      mul *= p_;
    }
    return r;
  };
  auto scale = [&](int s, int x) {
    int r = 0, mul = 1;
    for (int k = 0; k < b; ++k) {
      r += ((x % p_) * s % p_) * mul;
      x /= p_;
      mul *= p_;
    }
    return r;
  };
  while (true) {
    Fn f(na, 0);
    for (int v = 0; v < na; ++v) {
      int x = v, acc = 0;
      for (int j = 0; j < a; ++j) {
        acc = add(acc, scale(x % p_, cols[j]));
        x /= p_;
      }
      f[v] = acc;
    }
    out.push_back(f);
    int j = a - 1;
    while (j >= 0 && cols[j] == nb - 1) cols[j--] = 0;
    if (j < 0) break;
    ++cols[j];
  }
  return out;
}

TableConcreteCategory::TableConcreteCategory(CatPtr base, std::vector<int> sizes,
                                             std::vector<Fn> realize, bool faithful)
    : base_(std::move(base)), sizes_(std::move(sizes)), realize_(std::move(realize)),
      faithful_(faithful) {
  if (static_cast<int>(sizes_.size()) != base_->num_objects() ||
      static_cast<int>(realize_.size()) != base_->num_morphisms())
    throw StructureError("concrete tables do not match the base category");
}

std::vector<Fn> TableConcreteCategory::enumerate_hom(int a, int b) const {
  std::vector<Fn> out;
  for (Id f : base_->hom(a, b)) out.push_back(realize_[f]);
  return out;
}

int TableConcreteCategory::compose_index(int a, int b, int c, int g, int f) const {
  Id gm = base_->hom(b, c)[g];
  Id fm = base_->hom(a, b)[f];
  Id h = base_->compose(gm, fm);
  const auto& hs = base_->hom(a, c);
  for (size_t i = 0; i < hs.size(); ++i)
    if (hs[i] == h) return static_cast<int>(i);
  throw StructureError("composite missing from table");
}

ValidationReport TableConcreteCategory::validate() const {
  ValidationReport r = validate_category(*base_);
  if (!r.ok) return r;
  const auto& C = *base_;
  for (int f = 0; f < C.num_morphisms(); ++f) {
    const Fn& fn = realize_[f];
    if (static_cast<int>(fn.size()) != sizes_[C.src(f)]) {
      r.fail("realization of " + C.morphism(f).name + " has wrong domain");
      continue;
    }
    for (int x : fn)
      if (x < 0 || x >= sizes_[C.tgt(f)]) r.fail("realization of " + C.morphism(f).name + " leaves its codomain");
  }
  if (!r.ok) return r;
  for (int o = 0; o < C.num_objects(); ++o)
    if (realize_[C.identity(o)] != identity_fn(sizes_[o]))
      r.fail("identity of " + C.object_name(o) + " is not realized as the identity");
  for (int g = 0; g < C.num_morphisms(); ++g)
    for (int f = 0; f < C.num_morphisms(); ++f) {
      if (C.tgt(f) != C.src(g)) continue;
      if (realize_[C.compose(g, f)] != compose_fn(realize_[g], realize_[f]))
        r.fail("realization not functorial at (" + C.morphism(g).name + ", " + C.morphism(f).name + ")");
    }
  if (faithful_)
    for (int a = 0; a < C.num_objects(); ++a)
      for (int b = 0; b < C.num_objects(); ++b) {
        const auto& hs = C.hom(a, b);
        for (size_t i = 0; i < hs.size(); ++i)
          for (size_t j = i + 1; j < hs.size(); ++j)
            if (realize_[hs[i]] == realize_[hs[j]])
              r.fail("declared faithful but " + C.morphism(hs[i]).name + " and " +
                     C.morphism(hs[j]).name + " realize equally");
      }
  return r;
}

Materialized materialize(const ConcreteCategory& amb, const std::vector<int>& objects) {
  const int n = static_cast<int>(objects.size());
  std::vector<std::string> names;
  for (int o : objects) names.push_back(amb.object_name(o));
  std::vector<Morphism> mors;
  std::vector<std::pair<int, int>> source;
  std::vector<int> offset(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      offset[i * n + j] = static_cast<int>(mors.size());
      const auto& hs = amb.hom(objects[i], objects[j]);
      for (size_t k = 0; k < hs.size(); ++k) {
        mors.push_back({amb.object_name(objects[i]) + ">" + amb.object_name(objects[j]) + ":" +
                            join_ints(hs[k]),
                        i, j});
        source.push_back({i * n + j, static_cast<int>(k)});
      }
    }
  std::vector<Id> ids;
  for (int i = 0; i < n; ++i) ids.push_back(offset[i * n + i] + amb.identity_index(objects[i]));
  auto cat = share(FinCategory::build(names, mors, ids, [&](Id g, Id f) {
    int a = mors[f].src, b = mors[f].tgt, c = mors[g].tgt;
    int k = amb.compose_index(objects[a], objects[b], objects[c], source[g].second,
                              source[f].second);
    return offset[a * n + c] + k;
  }));
  return {cat, objects, source};
}

}  // namespace ck
