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

#include "ck/kan/codensity.hpp"

#include <algorithm>
#include <set>

namespace ck {

std::optional<int> CodensityValue::find(const Fn& phi) const {
  auto it = index.find(phi);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

bool CodensityValue::unit_injective() const {
  std::set<int> seen(unit.begin(), unit.end());
  return seen.size() == unit.size() && !seen.count(-1);
}

bool CodensityValue::unit_bijective() const {
  return unit_injective() && static_cast<int>(unit.size()) == size();
}

FamilyProblem codensity_problem(const ConcreteCategory& amb, const std::vector<int>& D, int c) {
  FamilyProblem p;
  for (int d : D) p.add_block(static_cast<int>(amb.hom(c, d).size()), amb.underlying_size(d));
  for (size_t i = 0; i < D.size(); ++i)
    for (size_t j = 0; j < D.size(); ++j) {
      const auto& gs = amb.hom(D[i], D[j]);
      const int nf = static_cast<int>(amb.hom(c, D[i]).size());
      for (size_t g = 0; g < gs.size(); ++g) {
        FamilyProblem::Arrow ar;
        ar.src = static_cast<int>(i);
        ar.tgt = static_cast<int>(j);
        ar.fmap.resize(nf);
        for (int k = 0; k < nf; ++k)
          ar.fmap[k] = amb.compose_index(c, D[i], D[j], static_cast<int>(g), k);
        ar.gmap = gs[g];
        p.arrows.push_back(std::move(ar));
      }
    }
  return p;
}

CodensityValue codensity_value(const ConcreteCategory& amb, const std::vector<int>& D, int c) {
  CodensityValue v;
  v.ambient = amb.name();
  v.D = D;
  v.c = c;
  v.offset.push_back(0);
  for (int d : D) v.offset.push_back(v.offset.back() + static_cast<int>(amb.hom(c, d).size()));
  v.elements = all_families(codensity_problem(amb, D, c));
  for (size_t e = 0; e < v.elements.size(); ++e) v.index.emplace(v.elements[e], static_cast<int>(e));
  const int nc = amb.underlying_size(c);
  for (int x = 0; x < nc; ++x) {
    Fn ev(v.offset.back());
    for (size_t i = 0; i < D.size(); ++i) {
      const auto& fs = amb.hom(c, D[i]);
      for (size_t k = 0; k < fs.size(); ++k) ev[v.offset[i] + k] = fs[k][x];
    }
    auto idx = v.find(ev);
    v.unit.push_back(idx ? *idx : -1);
  }
  return v;
}

bool families_natural(const ConcreteCategory& amb, const CodensityValue& v) {
  for (const Fn& phi : v.elements)
    for (size_t i = 0; i < v.D.size(); ++i)
      for (size_t j = 0; j < v.D.size(); ++j) {
        const auto& gs = amb.hom(v.D[i], v.D[j]);
        const auto& fs = amb.hom(v.c, v.D[i]);
        for (const Fn& g : gs)
          for (size_t k = 0; k < fs.size(); ++k) {
            auto gf = amb.find(v.c, v.D[j], compose_fn(g, fs[k]));
            if (!gf) return false;
            if (g[phi[v.offset[i] + k]] != phi[v.offset[j] + *gf]) return false;
          }
      }
  return true;
}

int CoaugmentedEndofunctor::position(int obj) const {
  auto it = std::find(window.begin(), window.end(), obj);
  return it == window.end() ? -1 : static_cast<int>(it - window.begin());
}

ValidationReport validate_coaugmented(const CoaugmentedEndofunctor& F) {
  ValidationReport r;
  const auto& A = *F.ambient;
  const int n = F.n();
  auto tag = [&](int i) { return A.object_name(F.window[i]); };
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(F.unit[i].size()) != A.underlying_size(F.window[i]))
      r.fail("unit at " + tag(i) + " has the wrong domain");
    const auto& ids = F.on(i, i);
    if (ids[A.identity_index(F.window[i])] != identity_fn(F.size[i]))
      r.fail("F does not preserve the identity of " + tag(i));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& hs = A.hom(F.window[i], F.window[j]);
      for (size_t k = 0; k < hs.size(); ++k) {
        const Fn& Fh = F.on(i, j)[k];
        if (static_cast<int>(Fh.size()) != F.size[i]) {
          r.fail("F(" + join_ints(hs[k]) + ") has the wrong domain");
          continue;
        }
        if (compose_fn(Fh, F.unit[i]) != compose_fn(F.unit[j], hs[k]))
          r.fail("unit not natural at " + tag(i) + "->" + tag(j) + ":" + join_ints(hs[k]));
      }
    }
  if (!r.ok) return r;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        const int a = F.window[i], b = F.window[j], c = F.window[l];
        const int nf = static_cast<int>(A.hom(a, b).size());
        const int ng = static_cast<int>(A.hom(b, c).size());
        for (int g = 0; g < ng; ++g)
          for (int f = 0; f < nf; ++f) {
            int gf = A.compose_index(a, b, c, g, f);
            if (F.on(i, l)[gf] != compose_fn(F.on(j, l)[g], F.on(i, j)[f]))
              r.fail("F not functorial at " + tag(i) + "->" + tag(j) + "->" + tag(l));
          }
      }
  return r;
}

CoaugmentedEndofunctor identity_coaugmented(const ConcreteCategory& amb,
                                            const std::vector<int>& window) {
  CoaugmentedEndofunctor F;
  F.name = "identity";
  F.ambient = &amb;
  F.window = window;
  for (int w : window) {
    F.size.push_back(amb.underlying_size(w));
    F.unit.push_back(identity_fn(amb.underlying_size(w)));
  }
  for (int a : window)
    for (int b : window) F.fmap.push_back(amb.hom(a, b));
  return F;
}

Fn codensity_map(const ConcreteCategory& amb, const CodensityValue& from, const CodensityValue& to,
                 const Fn& h) {
  Fn out(from.size());
  std::vector<int> pull(to.offset.back());
  for (size_t i = 0; i < to.D.size(); ++i) {
    const auto& fs = amb.hom(to.c, to.D[i]);
    for (size_t k = 0; k < fs.size(); ++k) {
      auto idx = amb.find(from.c, from.D[i], compose_fn(fs[k], h));
      if (!idx) throw StructureError("composite with h is not a morphism");
      pull[to.offset[i] + k] = from.offset[i] + *idx;
    }
  }
  Fn image(to.offset.back());
  for (int e = 0; e < from.size(); ++e) {
    for (size_t q = 0; q < pull.size(); ++q) image[q] = from.elements[e][pull[q]];
    auto idx = to.find(image);
    if (!idx) throw std::logic_error("codensity map left the family set");
    out[e] = *idx;
  }
  return out;
}

CoaugmentedEndofunctor codensity_coaugmented(const ConcreteCategory& amb,
                                             const std::vector<int>& D,
                                             const std::vector<int>& window,
                                             std::vector<CodensityValue>* values) {
  std::vector<CodensityValue> vals;
  for (int w : window) vals.push_back(codensity_value(amb, D, w));
  CoaugmentedEndofunctor F;
  F.name = "codensity";
  F.ambient = &amb;
  F.window = window;
  for (auto& v : vals) {
    F.size.push_back(v.size());
    F.unit.push_back(v.unit);
  }
  for (size_t i = 0; i < window.size(); ++i)
    for (size_t j = 0; j < window.size(); ++j) {
      std::vector<Fn> maps;
      for (const Fn& h : amb.hom(window[i], window[j]))
        maps.push_back(codensity_map(amb, vals[i], vals[j], h));
      F.fmap.push_back(std::move(maps));
    }
  if (values) *values = std::move(vals);
  return F;
}

bool d_preserving_check(const CoaugmentedEndofunctor& F, const std::vector<int>& D) {
  for (int d : D) {
    int i = F.position(d);
    if (i < 0) throw StructureError("object " + F.ambient->object_name(d) + " is outside the window");
    if (F.size[i] != static_cast<int>(F.unit[i].size())) return false;
    std::set<int> img(F.unit[i].begin(), F.unit[i].end());
    if (static_cast<int>(img.size()) != F.size[i]) return false;
  }
  return true;
}

FamilyProblem coaugmented_maps_problem(const CoaugmentedEndofunctor& F,
                                       const CoaugmentedEndofunctor& G) {
  if (F.window != G.window || F.ambient != G.ambient)
    throw StructureError("coaugmented functors live on different windows");
  FamilyProblem p;
  const int n = F.n();
  for (int i = 0; i < n; ++i) p.add_block(F.size[i], G.size[i]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (size_t k = 0; k < F.on(i, j).size(); ++k)
        p.arrows.push_back({i, j, F.on(i, j)[k], G.on(i, j)[k]});
  for (int i = 0; i < n; ++i)
    for (size_t x = 0; x < F.unit[i].size(); ++x) p.pins.push_back({i, F.unit[i][x], G.unit[i][x]});
  return p;
}

uint64_t count_coaugmented_maps(const CoaugmentedEndofunctor& F, const CoaugmentedEndofunctor& G) {
  return count_families(coaugmented_maps_problem(F, G));
}

uint64_t terminality_count(const CoaugmentedEndofunctor& F, const std::vector<int>& D) {
  auto T = codensity_coaugmented(*F.ambient, D, F.window);
  return count_coaugmented_maps(F, T);
}

std::vector<int> retract_closure(const ConcreteCategory& amb, const std::vector<int>& D,
                                 const std::vector<int>& window) {
  std::vector<int> out;
  for (int x : window) {
    const Fn id = identity_fn(amb.underlying_size(x));
    bool found = false;
    for (int d : D) {
      for (const Fn& s : amb.hom(x, d)) {
        for (const Fn& r : amb.hom(d, x))
          if (compose_fn(r, s) == id) {
            found = true;
            break;
          }
        if (found) break;
      }
      if (found) break;
    }
    if (found) out.push_back(x);
  }
  return out;
}

bool restriction_bijective(const ConcreteCategory& amb, const std::vector<int>& D,
                           const std::vector<int>& Dprime, int c) {
  auto small = codensity_value(amb, D, c);
  auto big = codensity_value(amb, Dprime, c);
  std::vector<int> pos;
  for (int d : D) {
    auto it = std::find(Dprime.begin(), Dprime.end(), d);
    if (it == Dprime.end()) throw StructureError("D is not contained in D'");
    pos.push_back(static_cast<int>(it - Dprime.begin()));
  }
  std::set<int> hit;
  for (const Fn& phi : big.elements) {
    Fn r;
    for (size_t i = 0; i < D.size(); ++i)
      r.insert(r.end(), phi.begin() + big.offset[pos[i]], phi.begin() + big.offset[pos[i] + 1]);
    auto idx = small.find(r);
    if (!idx || !hit.insert(*idx).second) return false;
  }
  return static_cast<int>(hit.size()) == small.size();
}

}  // namespace ck
