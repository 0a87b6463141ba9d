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

#include "ck/kan/localization.hpp"

#include <algorithm>

#include "ck/fincat/constructions.hpp"
#include "ck/fincat/limits.hpp"

namespace ck {

namespace {

bool initial_at(const FinCategory& c, Id o) {
  for (int b = 0; b < c.num_objects(); ++b)
    if (c.hom(o, b).size() != 1) return false;
  return true;
}

// The unique h: a -> b with h o f == g, or -1.
Id unique_factor(const FinCategory& C, Id a, Id b, Id f, Id g) {
  Id found = -1;
  int n = 0;
  for (Id h : C.hom(a, b))
    if (C.compose(h, f) == g) {
      found = h;
      ++n;
    }
  return n == 1 ? found : -1;
}

}  // namespace

std::optional<Localization> reflector_and_localization(const CatPtr& Cp, const std::vector<Id>& D) {
  const FinCategory& C = *Cp;
  const int n = C.num_objects();
  std::vector<Id> Lobj(n, -1), eta(n, -1);
  for (int c = 0; c < n; ++c) {
    for (Id d : D) {
      for (Id e : C.hom(c, d)) {
        bool universal = true;
        for (Id d2 : D) {
          for (Id f : C.hom(c, d2))
            if (unique_factor(C, d, d2, e, f) < 0) {
              universal = false;
              break;
            }
          if (!universal) break;
        }
        if (universal) {
          Lobj[c] = d;
          eta[c] = e;
          break;
        }
      }
      if (eta[c] >= 0) break;
    }
    if (eta[c] < 0) return std::nullopt;
  }

  Localization out;
  out.L = {Cp, Cp, Lobj, {}};
  for (int u = 0; u < C.num_morphisms(); ++u) {
    Id a = C.src(u), b = C.tgt(u);
    out.L.on_morphisms.push_back(unique_factor(C, Lobj[a], Lobj[b], eta[a], C.compose(eta[b], u)));
  }
  out.eta = {identity_functor(Cp), out.L, eta};
  auto rl = validate_functor(out.L);
  auto rn = validate_nat(out.eta);
  for (auto& v : rl.violations) out.notes.push_back("L: " + v);
  for (auto& v : rn.violations) out.notes.push_back("eta: " + v);

  out.triangles_ok = rl.ok && rn.ok;
  for (Id d : D) out.counit.push_back(unique_factor(C, Lobj[d], d, eta[d], C.identity(d)));
  auto counit_at = [&](Id d) {
    auto it = std::find(D.begin(), D.end(), d);
    return out.counit[it - D.begin()];
  };
  for (size_t i = 0; i < D.size(); ++i) {
    Id e = out.counit[i];
    if (e < 0 || C.compose(e, eta[D[i]]) != C.identity(D[i])) {
      out.triangles_ok = false;
      out.notes.push_back("counit triangle fails at " + C.object_name(D[i]));
    }
  }
  for (int c = 0; c < n; ++c) {
    Id e = counit_at(Lobj[c]);
    if (e < 0 || C.compose(e, out.L.on_morphisms[eta[c]]) != C.identity(Lobj[c])) {
      out.triangles_ok = false;
      out.notes.push_back("unit triangle fails at " + C.object_name(c));
    }
  }

  out.eta_initial = true;
  out.limit_ok = true;
  for (int c = 0; c < n; ++c) {
    auto comma = comma_under(Cp, D, c);
    auto it = std::find(comma.object_morphism.begin(), comma.object_morphism.end(), eta[c]);
    if (it == comma.object_morphism.end() ||
        !initial_at(*comma.cat, static_cast<Id>(it - comma.object_morphism.begin()))) {
      out.eta_initial = false;
      out.notes.push_back("unit at " + C.object_name(c) + " is not initial in the comma category");
    }
    auto lim = limit_in_finite_category(comma.projection);
    if (!lim || !objects_isomorphic(C, lim->apex, Lobj[c])) {
      out.limit_ok = false;
      out.notes.push_back("limit over the comma category at " + C.object_name(c) +
                          (lim ? " is not isomorphic to L(c)" : " does not exist"));
    }
  }
  return out;
}

}  // namespace ck
