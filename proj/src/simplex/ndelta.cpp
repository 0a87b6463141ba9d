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

#include "ck/simplex/ndelta.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "ck/common.hpp"
#include "ck/simplex/sset.hpp"

namespace ck {

bool Chain::degenerate() const {
  for (const OrdMap& m : maps)
    if (m.is_identity()) return true;
  return false;
}

std::string Chain::str() const {
  std::string s = std::to_string(cards[0]);
  for (size_t i = 0; i < maps.size(); ++i)
    s += "-[" + join_ints(maps[i].v) + "]->" + std::to_string(cards[i + 1]);
  return s;
}

bool Chain::operator<(const Chain& o) const {
  if (cards != o.cards) return cards < o.cards;
  return maps < o.maps;
}

Chain chain_face(const Chain& c, int i) {
  const int k = c.level();
  Chain r = c;
  r.cards.erase(r.cards.begin() + i);
  if (i == 0) {
    r.maps.erase(r.maps.begin());
  } else if (i == k) {
    r.maps.pop_back();
  } else {
    r.maps[i - 1] = ord_compose(c.maps[i], c.maps[i - 1]);
    r.maps.erase(r.maps.begin() + i);
  }
  return r;
}

Chain chain_degeneracy(const Chain& c, int i) {
  Chain r = c;
  r.cards.insert(r.cards.begin() + i, c.cards[i]);
  r.maps.insert(r.maps.begin() + i, ord_identity(c.cards[i]));
  return r;
}

Chain unit_chain(int level) {
  Chain c;
  c.cards.assign(level + 1, 0);
  c.maps.assign(level, OrdMap{0, 0, {}});
  return c;
}

Chain join_chains(const Chain& a, const Chain& b) {
  Chain r;
  for (size_t i = 0; i < a.cards.size(); ++i) r.cards.push_back(a.cards[i] + b.cards[i]);
  for (size_t i = 0; i < a.maps.size(); ++i) r.maps.push_back(ordinal_join(a.maps[i], b.maps[i]));
  return r;
}

Chain join_word(const std::vector<Chain>& word, int level) {
  Chain r = unit_chain(level);
  for (const Chain& c : word) r = join_chains(r, c);
  return r;
}

std::vector<Chain> enumerate_ndelta_plus(int k, int B, bool injective) {
  std::vector<Chain> out;
  std::vector<int> cards(k + 1, 0);
  Chain cur;
  std::function<void(int)> maps_from = [&](int i) {
    if (i == k) {
      out.push_back(cur);
      if (out.size() > guard_limit()) throw ResourceError("N(Delta_+) window exceeds the guard");
      return;
    }
    for (const OrdMap& m : injective ? monotone_injections(cards[i], cards[i + 1])
                                     : monotone_maps(cards[i], cards[i + 1])) {
      cur.maps.push_back(m);
      maps_from(i + 1);
      cur.maps.pop_back();
    }
  };
  std::function<void(int)> cards_from = [&](int i) {
    if (i > k) {
      cur.cards = cards;
      cur.maps.clear();
      maps_from(0);
      return;
    }
    for (int c = 0; c <= B; ++c) {
      cards[i] = c;
      cards_from(i + 1);
    }
  };
  cards_from(0);
  return out;
}

std::vector<Chain> join_decompose_chain(const Chain& c) {
  const int k = c.level();
  // to_last[i][x] = image of x in the last ordinal
  std::vector<std::vector<int>> to_last(k + 1);
  to_last[k].resize(c.cards[k]);
  for (int x = 0; x < c.cards[k]; ++x) to_last[k][x] = x;
  for (int i = k - 1; i >= 0; --i)
    for (int x = 0; x < c.cards[i]; ++x) to_last[i].push_back(to_last[i + 1][c.maps[i].v[x]]);
  std::vector<Chain> out;
  for (int p = 0; p < c.cards[k]; ++p) {
    Chain f;
    std::vector<int> start(k + 1, -1);
    for (int i = 0; i <= k; ++i) {
      int n = 0;
      for (int x = 0; x < c.cards[i]; ++x)
        if (to_last[i][x] == p) {
          if (start[i] < 0) start[i] = x;
          ++n;
        }
      f.cards.push_back(n);
    }
    for (int i = 0; i < k; ++i) {
      OrdMap m{f.cards[i], f.cards[i + 1], {}};
      for (int x = 0; x < f.cards[i]; ++x) m.v.push_back(c.maps[i].v[start[i] + x] - start[i + 1]);
      f.maps.push_back(std::move(m));
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::string BasisReport::stamp() const {
  return "window: level <= " + std::to_string(k) + ", ordinal size <= " + std::to_string(B) +
         ", word length <= " + std::to_string(B);
}

void BasisReport::fail(std::string m) {
  ok = false;
  if (violations.size() < 50) violations.push_back(std::move(m));
}

BasisReport word_uniqueness(int k, int B, const std::function<bool(const Chain&)>& generator,
                            bool injective) {
  BasisReport r;
  r.k = k;
  r.B = B;
  for (int n = 0; n <= k; ++n) {
    LevelCount lc;
    lc.level = n;
    const std::vector<Chain> chains = enumerate_ndelta_plus(n, B, injective);
    lc.chains = chains.size();
    std::vector<Chain> gens;
    for (const Chain& c : chains)
      if (generator(c)) {
        if (c.last() == 0 && std::all_of(c.cards.begin(), c.cards.end(), [](int x) { return x == 0; })) {
          r.fail("the unit chain cannot be a generator");
          continue;
        }
        gens.push_back(c);
        if (!c.degenerate()) ++lc.nondegenerate_basis;
      }
    lc.basis = gens.size();
    std::unordered_map<std::string, int> hits;
    hits.reserve(chains.size() * 2);
    Chain cur = unit_chain(n);
    std::function<void()> extend = [&]() {
      ++hits[cur.str()];
      if (++lc.words > guard_limit()) throw ResourceError("word enumeration exceeds the guard");
      for (const Chain& g : gens) {
        bool fits = true;
        for (int i = 0; i <= n && fits; ++i)
          if (cur.cards[i] + g.cards[i] > B) fits = false;
        if (!fits) continue;
        const Chain saved = cur;
        cur = join_chains(cur, g);
        extend();
        cur = saved;
      }
    };
    extend();
    for (const Chain& c : chains) {
      auto it = hits.find(c.str());
      const int h = it == hits.end() ? 0 : it->second;
      if (h == 0) r.fail("level " + std::to_string(n) + ": " + c.str() + " is not a word in the generators");
      if (h > 1)
        r.fail("level " + std::to_string(n) + ": " + c.str() + " has " + std::to_string(h) + " factorizations");
    }
    r.levels.push_back(lc);
  }
  return r;
}

BasisReport verify_basis_ndelta_plus(int k, int B) {
  BasisReport r = word_uniqueness(k, B, [](const Chain& c) { return c.last() == 1; });
  for (int n = 0; n <= k; ++n)
    for (const Chain& c : enumerate_ndelta_plus(n, B)) {
      const std::vector<Chain> parts = join_decompose_chain(c);
      for (const Chain& p : parts)
        if (p.last() != 1) r.fail(c.str() + " decomposes into the non-basis chain " + p.str());
      if (!(join_word(parts, n) == c)) r.fail(c.str() + " is not the join of its fiber chains");
      if (c.last() == 1 && n < k)
        for (int i = 0; i <= n; ++i)
          if (chain_degeneracy(c, i).last() != 1) r.fail("s_" + std::to_string(i) + " of " + c.str() + " leaves the basis");
    }
  return r;
}

HornAnnotation ndelta_horn_annotation(int k, int B) {
  HornAnnotation a;
  a.k = k;
  a.B = B;
  for (int n = 0; n <= k + 1; ++n) {
    std::vector<Chain> xs;
    std::vector<int> H, idx;
    for (const Chain& c : enumerate_ndelta_plus(n, B))
      if (c.last() == 1 && !c.degenerate()) {
        if (c.cards[0] == 0) {
          H.push_back(static_cast<int>(xs.size()));
          idx.push_back(0);
        }
        xs.push_back(c);
      }
    a.nondegenerate.push_back(std::move(xs));
    a.H.push_back(std::move(H));
    a.index.push_back(std::move(idx));
  }
  return a;
}

std::string HornReport::verdict() const {
  if (!ok) return "no horn generators";
  if (inner) return "inner anodyne free";
  if (left) return "left anodyne free";
  if (right) return "right anodyne free";
  return "anodyne free";
}

std::string HornReport::stamp() const {
  return "window: level <= " + std::to_string(k) + ", ordinal size <= " + std::to_string(B);
}

HornReport check_horn_annotation(const HornAnnotation& a) {
  HornReport r;
  r.k = a.k;
  r.B = a.B;
  auto fail = [&](std::string m) {
    r.ok = false;
    if (r.violations.size() < 50) r.violations.push_back(std::move(m));
  };
  if (static_cast<int>(a.nondegenerate.size()) < a.k + 2 || a.H.size() != a.nondegenerate.size() ||
      a.index.size() != a.H.size()) {
    fail("annotation does not cover levels 0.." + std::to_string(a.k + 1));
    return r;
  }
  if (!a.H[0].empty()) fail("H_0 is not empty");
  for (int n = 1; n <= a.k + 1; ++n)
    for (size_t t = 0; t < a.H[n].size(); ++t) {
      const int i = a.index[n][t];
      if (i < 0 || i > n) fail("horn index out of range at level " + std::to_string(n));
      if (!(0 < i && i < n)) r.inner = false;
      if (!(i < n)) r.left = false;
      if (!(i > 0)) r.right = false;
    }
  for (int n = 0; n <= a.k; ++n) {
    const auto& X = a.nondegenerate[n];
    std::map<std::string, int> pos;
    for (size_t x = 0; x < X.size(); ++x) pos[X[x].str()] = static_cast<int>(x);
    std::vector<int> cover(X.size(), 0);
    for (int h : a.H[n]) ++cover[h];
    for (size_t t = 0; t < a.H[n + 1].size(); ++t) {
      const Chain& h = a.nondegenerate[n + 1][a.H[n + 1][t]];
      const int i = a.index[n + 1][t];
      if (i < 0 || i > n + 1) continue;
      const Chain f = chain_face(h, i);
      auto it = pos.find(f.str());
      if (it == pos.end()) {
        fail("d_" + std::to_string(i) + " of " + h.str() + " = " + f.str() + " is not a non-degenerate generator");
        continue;
      }
      ++cover[it->second];
    }
    for (size_t x = 0; x < X.size(); ++x)
      if (cover[x] != 1)
        fail("level " + std::to_string(n) + ": " + X[x].str() + " is covered " + std::to_string(cover[x]) +
             " times by H_" + std::to_string(n) + " and faces of H_" + std::to_string(n + 1));
    r.levels.push_back({n, X.size(), a.H[n].size(), a.H[n + 1].size()});
  }
  return r;
}

HornReport verify_horn_generators_ndelta_plus(int k, int B) {
  return check_horn_annotation(ndelta_horn_annotation(k, B));
}

Chain f_kn(int k, int n) {
  Chain c;
  for (int i = 0; i <= n; ++i) c.cards.push_back(i < k ? 0 : 1);
  for (int i = 0; i < n; ++i) {
    OrdMap m{c.cards[i], c.cards[i + 1], {}};
    if (c.cards[i] == 1) m.v.push_back(0);
    c.maps.push_back(m);
  }
  return c;
}

std::string InjBasisReport::stamp() const {
  return "window: level <= " + std::to_string(n) + ", ordinal size <= " + std::to_string(B);
}

InjBasisReport verify_basis_delta_inj(int n, int B) {
  InjBasisReport r;
  r.n = n;
  r.B = B;
  auto fail = [&](std::string m) {
    r.ok = false;
    if (r.violations.size() < 50) r.violations.push_back(std::move(m));
  };
  BasisReport words = word_uniqueness(n, B, [](const Chain& c) { return c.last() == 1; }, true);
  r.levels = words.levels;
  for (const auto& v : words.violations) fail(v);
  for (int m = 0; m <= n; ++m) {
    std::vector<Chain> basis;
    for (const Chain& c : enumerate_ndelta_plus(m, B, true))
      if (c.last() == 1) basis.push_back(c);
    std::vector<Chain> expected;
    for (int k = 0; k <= m; ++k) expected.push_back(f_kn(k, m));
    std::sort(expected.begin(), expected.end());
    if (basis != expected) fail("level " + std::to_string(m) + ": basis differs from the chains f_(k,n)");
    if (static_cast<int>(basis.size()) != m + 1)
      fail("level " + std::to_string(m) + ": " + std::to_string(basis.size()) + " generators, expected " +
           std::to_string(m + 1));
  }
  // Delta^1 -> N(Delta_+^inj) sending the vertex string g to i -> [g(i) - 1].
  const TruncatedSSet D1 = standard_simplex(1, n);
  auto image = [&](int m, int x) {
    Chain c;
    for (char ch : D1.simplices[m][x]) c.cards.push_back(ch - '0');
    for (int i = 0; i < m; ++i) {
      OrdMap e{c.cards[i], c.cards[i + 1], {}};
      if (c.cards[i] == 1) e.v.push_back(0);
      c.maps.push_back(e);
    }
    return c;
  };
  for (int m = 0; m <= n; ++m) {
    std::vector<Chain> hit;
    for (int x = 0; x < D1.size(m); ++x) {
      const Chain c = image(m, x);
      if (c == unit_chain(m)) continue;  // the base point goes to the unit
      hit.push_back(c);
      for (int i = 0; m >= 1 && i <= m; ++i)
        if (!(chain_face(c, i) == image(m - 1, D1.d(m, i, x)))) {
          r.delta1_bijection = false;
          fail("Delta^1 map does not commute with d_" + std::to_string(i) + " at " + D1.simplices[m][x]);
        }
      for (int i = 0; m < n && i <= m; ++i)
        if (!(chain_degeneracy(c, i) == image(m + 1, D1.s(m, i, x)))) {
          r.delta1_bijection = false;
          fail("Delta^1 map does not commute with s_" + std::to_string(i) + " at " + D1.simplices[m][x]);
        }
    }
    std::sort(hit.begin(), hit.end());
    std::vector<Chain> expected;
    for (int k = 0; k <= m; ++k) expected.push_back(f_kn(k, m));
    std::sort(expected.begin(), expected.end());
    if (hit != expected) {
      r.delta1_bijection = false;
      fail("level " + std::to_string(m) + ": Delta^1 simplices off the base point do not match the basis");
    }
  }
  return r;
}

}  // namespace ck
