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

#include "ck/fincat/limits.hpp"

namespace ck {

namespace {

void extend_cone(const FinFunctor& F, Id apex, size_t j, std::vector<Id>& legs,
                 std::vector<Cone>& out) {
  const FinCategory& J = *F.dom;
  const FinCategory& C = *F.cod;
  if (j == legs.size()) {
    out.push_back({apex, legs});
    return;
  }
  for (Id leg : C.hom(apex, F.on_objects[j])) {
    legs[j] = leg;
    bool ok = true;
    for (int u = 0; u < J.num_morphisms() && ok; ++u) {
      Id s = J.src(u), t = J.tgt(u);
      if (static_cast<size_t>(s) > j || static_cast<size_t>(t) > j) continue;
      if (C.compose(F.on_morphisms[u], legs[s]) != legs[t]) ok = false;
    }
    if (ok) extend_cone(F, apex, j + 1, legs, out);
  }
  legs[j] = -1;
}

}  // namespace

std::vector<Cone> cones_at(const FinFunctor& diagram, Id apex) {
  std::vector<Cone> out;
  std::vector<Id> legs(diagram.dom->num_objects(), -1);
  extend_cone(diagram, apex, 0, legs, out);
  return out;
}

std::optional<Cone> limit_in_finite_category(const FinFunctor& diagram) {
  const FinCategory& C = *diagram.cod;
  std::vector<Cone> all;
  for (int a = 0; a < C.num_objects(); ++a) {
    auto cs = cones_at(diagram, a);
    all.insert(all.end(), cs.begin(), cs.end());
  }
  for (const Cone& L : all) {
    bool universal = true;
    for (const Cone& K : all) {
      int mediators = 0;
      for (Id h : C.hom(K.apex, L.apex)) {
        bool ok = true;
        for (size_t j = 0; j < L.legs.size() && ok; ++j)
          if (C.compose(L.legs[j], h) != K.legs[j]) ok = false;
        if (ok) ++mediators;
      }
      if (mediators != 1) {
        universal = false;
        break;
      }
    }
    if (universal) return L;
  }
  return std::nullopt;
}

std::optional<Id> initial_object(const FinCategory& c) {
  for (int a = 0; a < c.num_objects(); ++a) {
    bool ok = true;
    for (int b = 0; b < c.num_objects() && ok; ++b)
      if (c.hom(a, b).size() != 1) ok = false;
    if (ok) return a;
  }
  return std::nullopt;
}

std::optional<Id> terminal_object(const FinCategory& c) {
  for (int a = 0; a < c.num_objects(); ++a) {
    bool ok = true;
    for (int b = 0; b < c.num_objects() && ok; ++b)
      if (c.hom(b, a).size() != 1) ok = false;
    if (ok) return a;
  }
  return std::nullopt;
}

bool is_isomorphism(const FinCategory& c, Id f) {
  for (Id g : c.hom(c.tgt(f), c.src(f)))
    if (c.compose(g, f) == c.identity(c.src(f)) && c.compose(f, g) == c.identity(c.tgt(f)))
      return true;
  return false;
}

bool objects_isomorphic(const FinCategory& c, Id a, Id b) {
  for (Id f : c.hom(a, b))
    if (is_isomorphism(c, f)) return true;
  return false;
}

}  // namespace ck
