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

#include "ck/fincat/ordinal.hpp"

#include <map>
#include <stdexcept>

#include "ck/common.hpp"

namespace ck {

bool OrdMap::operator<(const OrdMap& o) const {
  if (dom != o.dom) return dom < o.dom;
  if (cod != o.cod) return cod < o.cod;
  return v < o.v;
}

bool OrdMap::valid() const {
  if (static_cast<int>(v.size()) != dom || dom < 0 || cod < 0) return false;
  for (int i = 0; i < dom; ++i) {
    if (v[i] < 0 || v[i] >= cod) return false;
    if (i && v[i] < v[i - 1]) return false;
  }
  return true;
}

bool OrdMap::injective() const {
  for (int i = 1; i < dom; ++i)
    if (v[i] == v[i - 1]) return false;
  return true;
}

bool OrdMap::surjective() const {
  std::vector<bool> hit(cod, false);
  for (int x : v) hit[x] = true;
  for (bool h : hit)
    if (!h) return false;
  return true;
}

bool OrdMap::is_identity() const {
  if (dom != cod) return false;
  for (int i = 0; i < dom; ++i)
    if (v[i] != i) return false;
  return true;
}

std::string OrdMap::str() const {
  return std::to_string(dom) + ">" + std::to_string(cod) + ":" + join_ints(v);
}

std::string ordinal_name(int card) { return "[" + std::to_string(card - 1) + "]"; }

OrdMap ord_identity(int card) {
  OrdMap m{card, card, {}};
  for (int i = 0; i < card; ++i) m.v.push_back(i);
  return m;
}

OrdMap ord_compose(const OrdMap& g, const OrdMap& f) {
  if (f.cod != g.dom) throw std::invalid_argument("ordinal maps not composable");
  OrdMap h{f.dom, g.cod, {}};
  for (int x : f.v) h.v.push_back(g.v[x]);
  return h;
}

OrdMap ordinal_join(const OrdMap& a, const OrdMap& b) {
  OrdMap j{a.dom + b.dom, a.cod + b.cod, a.v};
  for (int x : b.v) j.v.push_back(x + a.cod);
  return j;
}

OrdMap amax(int n) { return OrdMap{n + 1, 1, std::vector<int>(n + 1, 0)}; }

namespace {
void gen_monotone(int dom, int cod, int pos, int lo, std::vector<int>& cur,
                  std::vector<OrdMap>& out) {
  if (pos == dom) {
    out.push_back({dom, cod, cur});
    return;
  }
  for (int x = lo; x < cod; ++x) {
    cur.push_back(x);
    gen_monotone(dom, cod, pos + 1, x, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<OrdMap> monotone_maps(int dom, int cod) {
  std::vector<OrdMap> out;
  std::vector<int> cur;
  gen_monotone(dom, cod, 0, 0, cur, out);
  return out;
}

std::vector<OrdMap> monotone_injections(int dom, int cod) {
  std::vector<OrdMap> out;
  for (auto& m : monotone_maps(dom, cod))
    if (m.injective()) out.push_back(m);
  return out;
}

std::vector<OrdMap> monotone_surjections(int dom, int cod) {
  std::vector<OrdMap> out;
  for (auto& m : monotone_maps(dom, cod))
    if (m.surjective()) out.push_back(m);
  return out;
}

std::vector<OrdMap> max_maps(int dom, int cod) {
  std::vector<OrdMap> out;
  if (dom < 1 || cod < 1) return out;
  for (auto& m : monotone_maps(dom, cod))
    if (m.is_max()) out.push_back(m);
  return out;
}

uint64_t count_monotone(int dom, int cod) {
  if (cod == 0) return dom == 0 ? 1 : 0;
  return binomial(static_cast<unsigned>(dom + cod - 1), static_cast<unsigned>(dom));
}

std::pair<OrdMap, int> max_canonical_form(const OrdMap& g) {
  if (!g.is_max()) throw std::invalid_argument("map does not preserve the maximum");
  int top = 0;
  for (int x : g.v)
    if (x == g.cod - 1) ++top;
  OrdMap f{g.dom - top, g.cod - 1, std::vector<int>(g.v.begin(), g.v.begin() + (g.dom - top))};
  return {f, top - 1};
}

OrdMap max_from_canonical(const OrdMap& f, int n) { return ordinal_join(f, amax(n)); }

OrdMap max_compose(const OrdMap& g2, const OrdMap& g1) {
  if (g1.cod != g2.dom) throw std::invalid_argument("max maps not composable");
  // g2 = f * a^s ; g1 = h * a^t with h = h1 * h2, h1 landing in dom(f), h2 in the
  // s non-top points of the top block of g2's domain.
  auto [f, s] = max_canonical_form(g2);
  auto [h, t] = max_canonical_form(g1);
  int l1 = 0;
  while (l1 < h.dom && h.v[l1] < f.dom) ++l1;
  OrdMap h1{l1, f.dom, std::vector<int>(h.v.begin(), h.v.begin() + l1)};
  const int l2 = h.dom - l1;
  OrdMap result = max_from_canonical(ord_compose(f, h1), t + l2);
  if (!(result == ord_compose(g2, g1)))
    throw std::logic_error("canonical-form composition disagrees with pointwise composition");
  return result;
}

OrdMap coface(int n, int i) {
  OrdMap m{n, n + 1, {}};
  for (int k = 0; k < n; ++k) m.v.push_back(k < i ? k : k + 1);
  return m;
}

OrdMap codegeneracy(int n, int j) {
  OrdMap m{n + 2, n + 1, {}};
  for (int k = 0; k < n + 2; ++k) m.v.push_back(k <= j ? k : k - 1);
  return m;
}

FinCategory simplex_category(SimplexKind kind, int lo, int hi) {
  if (kind == SimplexKind::Delta || kind == SimplexKind::Max) lo = std::max(lo, 1);
  std::vector<std::string> objs;
  for (int k = lo; k <= hi; ++k) objs.push_back(ordinal_name(k));
  std::vector<Morphism> mors;
  std::vector<OrdMap> maps;
  std::map<OrdMap, Id> index;
  for (int a = lo; a <= hi; ++a)
    for (int b = lo; b <= hi; ++b)
      for (auto& m : monotone_maps(a, b)) {
        bool keep = true;
        if (kind == SimplexKind::Max) keep = m.is_max();
        if (kind == SimplexKind::PlusInj) keep = m.injective();
        if (!keep) continue;
        index[m] = static_cast<Id>(mors.size());
        mors.push_back({m.str(), a - lo, b - lo});
        maps.push_back(m);
      }
  std::vector<Id> ids;
  for (int k = lo; k <= hi; ++k) ids.push_back(index.at(ord_identity(k)));
  return FinCategory::build(objs, mors, ids,
                            [&](Id g, Id f) { return index.at(ord_compose(maps[g], maps[f])); });
}

std::vector<OrdMap> simplex_category_maps(const FinCategory& c) {
  std::vector<OrdMap> out;
  for (const auto& m : c.morphisms()) {
    OrdMap o;
    auto gt = m.name.find('>');
    auto colon = m.name.find(':');
    o.dom = std::stoi(m.name.substr(0, gt));
    o.cod = std::stoi(m.name.substr(gt + 1, colon - gt - 1));
    std::string rest = m.name.substr(colon + 1);
    size_t p = 0;
    while (p < rest.size()) {
      size_t q = rest.find(',', p);
      if (q == std::string::npos) q = rest.size();
      o.v.push_back(std::stoi(rest.substr(p, q - p)));
      p = q + 1;
    }
    out.push_back(o);
  }
  return out;
}

}  // namespace ck
