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

#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <map>
#include <set>
#include <stdexcept>

namespace oracle {

std::vector<Fn> functions(int n, int m) {
  std::vector<Fn> out;
  if (n > 0 && m == 0) return out;
  Fn f(n, 0);
  while (true) {
    out.push_back(f);
    int i = n - 1;
    while (i >= 0 && f[i] == m - 1) f[i--] = 0;
    if (i < 0) break;
    ++f[i];
  }
  return out;
}

Fn compose(const Fn& g, const Fn& f) {
  Fn h;
  for (int x : f) h.push_back(g[x]);
  return h;
}

namespace {

int position(const std::vector<Fn>& list, const Fn& f) {
  auto it = std::find(list.begin(), list.end(), f);
  if (it == list.end()) throw std::logic_error("function not listed");
  return static_cast<int>(it - list.begin());
}

// phi[i][k]: value of the family at D[i] on hom(c, D[i])[k].
bool natural(const std::vector<int>& D, const std::vector<std::vector<Fn>>& homs,
             const std::vector<std::vector<int>>& phi) {
  for (size_t i = 0; i < D.size(); ++i)
    for (size_t j = 0; j < D.size(); ++j)
      for (const Fn& g : functions(D[i], D[j]))
        for (size_t k = 0; k < homs[i].size(); ++k) {
          int gf = position(homs[j], compose(g, homs[i][k]));
          if (g[phi[i][k]] != phi[j][gf]) return false;
        }
  return true;
}

}  // namespace

uint64_t finset_codensity_raw(const std::vector<int>& D, int c) {
  std::vector<std::vector<Fn>> homs;
  double cands = 1;
  for (int d : D) {
    homs.push_back(functions(c, d));
    for (size_t k = 0; k < homs.back().size(); ++k) cands *= d;
  }
  if (cands > (1 << 22)) throw std::runtime_error("raw oracle too large");
  if (cands == 0) return 0;  // some hom(c, d) is nonempty with d empty
  std::vector<std::vector<int>> phi(D.size());
  for (size_t i = 0; i < D.size(); ++i) phi[i].assign(homs[i].size(), 0);
  uint64_t count = 0;
  while (true) {
    if (natural(D, homs, phi)) ++count;
    // Odometer over all assignments.
    int i = static_cast<int>(D.size()) - 1;
    bool carried = true;
    while (i >= 0 && carried) {
      int k = static_cast<int>(phi[i].size()) - 1;
      while (k >= 0 && phi[i][k] == D[i] - 1) phi[i][k--] = 0;
      if (k >= 0) {
        ++phi[i][k];
        carried = false;
      } else {
        --i;
      }
    }
    if (carried) break;
  }
  return count;
}

FamilyCount finset_codensity_generated(const std::vector<int>& D, int c) {
  const int m = *std::max_element(D.begin(), D.end());
  if (c > m) throw std::invalid_argument("c larger than max(D)");
  std::vector<std::vector<Fn>> homs;
  for (int d : D) homs.push_back(functions(c, d));
  const int im = static_cast<int>(std::find(D.begin(), D.end(), m) - D.begin());
  std::vector<std::vector<int>> found;
  for (int v = 0; v < m; ++v) {
    std::vector<std::vector<int>> phi(D.size());
    bool consistent = true;
    // Top component: phi_m(f) = g(v) for any g: m -> m extending f on 0..c-1.
    for (const Fn& f : homs[im]) {
      std::set<int> vals;
      for (const Fn& g : functions(m, m)) {
        bool ext = true;
        for (int x = 0; x < c; ++x) ext = ext && g[x] == f[x];
        if (ext) vals.insert(g[v]);
      }
      if (vals.size() != 1) consistent = false;
      phi[im].push_back(*vals.begin());
    }
    if (!consistent) continue;
    for (size_t i = 0; i < D.size(); ++i) {
      if (static_cast<int>(i) == im) continue;
      const int d = D[i];
      Fn s(d), r(m);
      for (int x = 0; x < d; ++x) s[x] = x;
      for (int y = 0; y < m; ++y) r[y] = std::min(y, d - 1);
      for (const Fn& f : homs[i]) phi[i].push_back(r[phi[im][position(homs[im], compose(s, f))]]);
    }
    if (natural(D, homs, phi)) found.push_back({v});
  }
  FamilyCount out;
  out.count = found.size();
  // Evaluation at x sends the inclusion c -> m to x, so the unit is a
  // bijection exactly when the surviving seeds are 0..c-1.
  std::vector<std::vector<int>> expect;
  for (int x = 0; x < c; ++x) expect.push_back({x});
  out.unit_bijective = found == expect;
  return out;
}

namespace {

// Linear maps F2^a -> F2^b as functions on bitmask-encoded vectors.
std::vector<Fn> linear_maps(int a, int b) {
  std::vector<Fn> out;
  const int na = 1 << a;
  for (const Fn& cols : functions(a, 1 << b)) {
    Fn f(na, 0);
    for (int v = 0; v < na; ++v)
      for (int j = 0; j < a; ++j)
        if (v >> j & 1) f[v] ^= cols[j];
    out.push_back(f);
  }
  return out;
}

}  // namespace

FamilyCount double_dual_families(int n) {
  const std::vector<int> dims{1, 2};
  std::vector<std::vector<Fn>> homs{linear_maps(n, 1), linear_maps(n, 2)};
  const int n1 = static_cast<int>(homs[0].size());
  std::vector<std::vector<int>> fams;
  for (const Fn& seed : functions(n1, 2)) {
    std::vector<std::vector<int>> phi{seed, {}};
    for (const Fn& f : homs[1]) {
      Fn p0, p1;
      for (int x : f) {
        p0.push_back(x & 1);
        p1.push_back(x >> 1 & 1);
      }
      phi[1].push_back(seed[position(homs[0], p0)] | seed[position(homs[0], p1)] << 1);
    }
    bool ok = true;
    for (size_t i = 0; i < 2 && ok; ++i)
      for (size_t j = 0; j < 2 && ok; ++j)
        for (const Fn& g : linear_maps(dims[i], dims[j]))
          for (size_t k = 0; k < homs[i].size() && ok; ++k)
            if (g[phi[i][k]] != phi[j][position(homs[j], compose(g, homs[i][k]))]) ok = false;
    if (ok) fams.push_back(seed);
  }
  FamilyCount out;
  out.count = fams.size();
  std::set<Fn> evals;
  for (int v = 0; v < (1 << n); ++v) {
    Fn e;
    for (const Fn& l : homs[0]) e.push_back(l[v]);
    evals.insert(e);
  }
  std::set<Fn> fs(fams.begin(), fams.end());
  out.unit_bijective = evals == fs && static_cast<int>(evals.size()) == (1 << n);
  return out;
}

}  // namespace oracle

namespace oracle {

uint64_t powerset_algebra_count(int n) {
  const int N = 1 << n;
  uint64_t count = 0;
  for (const Fn& a : functions(N, n)) {
    bool ok = true;
    for (int i = 0; ok && i < n; ++i) ok = a[1 << i] == i;
    // Families E of subsets are bitmasks over N.
    for (uint64_t E = 0; ok && E < (uint64_t{1} << N); ++E) {
      int uni = 0, acts = 0;
      for (int s = 0; s < N; ++s)
        if (E >> s & 1) {
          uni |= s;
          acts |= 1 << a[s];
        }
      ok = a[uni] == a[acts];
    }
    if (ok) ++count;
  }
  return count;
}

std::vector<std::vector<int>> affine_elements(int q, int n) {
  std::vector<std::vector<int>> out;
  for (const Fn& v : functions(n, q)) {
    int s = 0;
    for (int r : v) s += r;
    if (s % q == 1 % q) out.push_back(v);
  }
  return out;
}

uint64_t affine_algebra_count(int q, int n) {
  const auto T = affine_elements(q, n);
  const int t = static_cast<int>(T.size());
  const auto TT = affine_elements(q, t);
  std::vector<int> mu(TT.size());
  for (size_t E = 0; E < TT.size(); ++E) {
    std::vector<int> v(n, 0);
    for (int e = 0; e < t; ++e)
      for (int x = 0; x < n; ++x) v[x] = (v[x] + TT[E][e] * T[e][x]) % q;
    mu[E] = static_cast<int>(std::find(T.begin(), T.end(), v) - T.begin());
  }
  uint64_t count = 0;
  for (const Fn& a : functions(t, n)) {
    bool ok = true;
    for (int e = 0; ok && e < t; ++e) {
      int ones = 0, at = -1;
      for (int x = 0; x < n; ++x)
        if (T[e][x]) ++ones, at = x;
      if (ones == 1 && T[e][at] == 1) ok = a[e] == at;
    }
    for (size_t E = 0; ok && E < TT.size(); ++E) {
      std::vector<int> v(n, 0);
      for (int e = 0; e < t; ++e) v[a[e]] = (v[a[e]] + TT[E][e]) % q;
      const int img = static_cast<int>(std::find(T.begin(), T.end(), v) - T.begin());
      ok = a[mu[E]] == a[img];
    }
    if (ok) ++count;
  }
  return count;
}

std::vector<uint32_t> powerset_equalizer(int n) {
  std::vector<uint32_t> out;
  for (uint32_t m = 0; m < (1u << n); ++m) {
    std::set<std::set<int>> lhs, rhs;
    std::set<int> whole;
    for (int x = 0; x < n; ++x)
      if (m >> x & 1) {
        lhs.insert({x});
        whole.insert(x);
      }
    rhs.insert(whole);
    if (lhs == rhs) out.push_back(m);
  }
  return out;
}

std::vector<std::vector<int>> affine_equalizer(int q, int n) {
  std::vector<std::vector<int>> out;
  for (const auto& m : affine_elements(q, n)) {
    std::map<std::vector<int>, int> lhs, rhs;
    for (int x = 0; x < n; ++x) {
      if (m[x] == 0) continue;
      std::vector<int> dirac(n, 0);
      dirac[x] = 1;
      lhs[dirac] = (lhs[dirac] + m[x]) % q;
    }
    rhs[m] = 1 % q;
    for (auto it = lhs.begin(); it != lhs.end();) it = it->second ? std::next(it) : lhs.erase(it);
    if (lhs == rhs) out.push_back(m);
  }
  return out;
}

namespace {

struct Nested {
  int atom = -1;
  std::vector<Nested> elems;
  bool operator<(const Nested& o) const {
    return atom != o.atom ? atom < o.atom : elems < o.elems;
  }
  bool operator==(const Nested& o) const { return atom == o.atom && elems == o.elems; }
};

Nested set_of(std::vector<Nested> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  Nested n;
  n.elems = std::move(v);
  return n;
}

Nested at_layer(const Nested& v, int layer, const std::function<Nested(const Nested&)>& op) {
  if (layer == 0) return op(v);
  std::vector<Nested> out;
  for (const Nested& e : v.elems) out.push_back(at_layer(e, layer - 1, op));
  return set_of(out);
}

Nested eta(const Nested& v) { return set_of({v}); }
Nested mu(const Nested& v) {
  std::vector<Nested> out;
  for (const Nested& e : v.elems) out.insert(out.end(), e.elems.begin(), e.elems.end());
  return set_of(out);
}
Nested act(const Nested& v) {
  int m = 0;
  for (const Nested& e : v.elems) m = std::max(m, e.atom);
  Nested r;
  r.atom = m;
  return r;
}

// a^n on T^n(x): a^1 = a, a^{k+1} = a . T(a^k).
Nested act_power(const Nested& v, int n) {
  if (n == 0) return v;
  std::vector<Nested> inner;
  for (const Nested& e : v.elems) inner.push_back(act_power(e, n - 1));
  return act(set_of(inner));
}

// Cobar map of a monotone f: p -> q applied to T^p(y), split as a surjection
// onto the image followed by an injection.
Nested cobar(const Fn& f, int q, Nested v) {
  std::vector<int> image;
  for (int y : f)
    if (image.empty() || image.back() != y) image.push_back(y);
  // Collapse fibers from the right so earlier layer positions stay put.
  int end = static_cast<int>(f.size());
  for (int k = static_cast<int>(image.size()) - 1; k >= 0; --k) {
    int start = end;
    while (start > 0 && f[start - 1] == image[k]) --start;
    for (int r = 1; r < end - start; ++r) v = at_layer(v, start, mu);
    end = start;
  }
  for (int i = 0; i < q; ++i)
    if (!std::binary_search(image.begin(), image.end(), i)) v = at_layer(v, i, eta);
  return v;
}

Nested psi(const Fn& g, int q, const Nested& v) {
  int n = 0;
  for (int y : g) n += y == q - 1;
  --n;
  Fn f(g.begin(), g.end() - (n + 1));
  const int lower = static_cast<int>(f.size());
  // a^n under the first `lower` layers.
  std::function<Nested(const Nested&, int)> under = [&](const Nested& w, int depth) -> Nested {
    if (depth == 0) return act_power(w, n);
    std::vector<Nested> out;
    for (const Nested& e : w.elems) out.push_back(under(e, depth - 1));
    return set_of(out);
  };
  return cobar(f, q - 1, under(v, lower));
}

std::vector<Nested> all_nested(int x, int depth) {
  std::vector<Nested> level;
  for (int i = 0; i < x; ++i) {
    Nested a;
    a.atom = i;
    level.push_back(a);
  }
  for (int d = 0; d < depth; ++d) {
    std::vector<Nested> next;
    for (uint64_t m = 0; m < (uint64_t{1} << level.size()); ++m) {
      std::vector<Nested> e;
      for (size_t i = 0; i < level.size(); ++i)
        if (m >> i & 1) e.push_back(level[i]);
      next.push_back(set_of(e));
    }
    level = std::move(next);
  }
  return level;
}

Nested random_nested(int x, int depth, std::mt19937& rng) {
  if (depth == 0) {
    Nested a;
    a.atom = static_cast<int>(rng() % x);
    return a;
  }
  std::vector<Nested> e;
  const int k = static_cast<int>(rng() % 4);
  for (int i = 0; i < k; ++i) e.push_back(random_nested(x, depth - 1, rng));
  return set_of(e);
}

std::vector<Fn> max_preserving(int p, int q) {
  std::vector<Fn> out;
  for (const Fn& f : functions(p, q)) {
    if (f.back() != q - 1) continue;
    if (std::is_sorted(f.begin(), f.end())) out.push_back(f);
  }
  return out;
}

}  // namespace

WalkingTally walking_chain_oracle(int x, int max_card, int samples) {
  WalkingTally t;
  std::mt19937 rng(7);
  for (int p = 1; p <= max_card; ++p) {
    std::vector<Nested> inputs;
    if (p - 1 <= 2 && (p - 1 < 2 || x <= 3))
      inputs = all_nested(x, p - 1);
    else
      for (int i = 0; i < samples; ++i) inputs.push_back(random_nested(x, p - 1, rng));
    for (int q = 1; q <= max_card; ++q)
      for (const Fn& g1 : max_preserving(p, q))
        for (int s = 1; s <= max_card; ++s)
          for (const Fn& g2 : max_preserving(q, s)) {
            ++t.pairs;
            const Fn g = compose(g2, g1);
            for (const Nested& v : inputs) {
              ++t.evaluations;
              if (!(psi(g, s, v) == psi(g2, s, psi(g1, q, v)))) ++t.failures;
            }
          }
  }
  return t;
}

uint64_t poset_chain_count(const std::vector<std::vector<int>>& leq, int k) {
  const int n = static_cast<int>(leq.size());
  // paths of length k in the relation graph
  std::vector<uint64_t> ways(n, 1);
  for (int step = 0; step < k; ++step) {
    std::vector<uint64_t> next(n, 0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (leq[a][b]) next[b] += ways[a];
    ways = next;
  }
  uint64_t total = 0;
  for (uint64_t w : ways) total += w;
  return total;
}

uint64_t monotone_count(int a, int b) {
  uint64_t count = 0;
  for (const Fn& f : functions(a, b)) {
    bool ok = true;
    for (int i = 1; i < a; ++i)
      if (f[i] < f[i - 1]) ok = false;
    if (ok) ++count;
  }
  return count;
}

uint64_t count_sset_maps(const SSetTables& K, const SSetTables& X) {
  const int N = static_cast<int>(K.sizes.size()) - 1;
  std::vector<std::vector<int>> val(N + 1);
  for (int n = 0; n <= N; ++n) val[n].assign(K.sizes[n], -1);
  uint64_t count = 0;
  std::function<void(int, int)> go = [&](int n, int x) {
    if (n > N) {
      for (int m = 0; m < N; ++m)
        for (size_t i = 0; i < K.degen[m].size(); ++i)
          for (int y = 0; y < K.sizes[m]; ++y)
            if (val[m + 1][K.degen[m][i][y]] != X.degen[m][i][val[m][y]]) return;
      ++count;
      return;
    }
    if (x == K.sizes[n]) return go(n + 1, 0);
    for (int v = 0; v < X.sizes[n]; ++v) {
      bool ok = true;
      for (size_t i = 0; n >= 1 && i < K.face[n].size() && ok; ++i)
        if (val[n - 1][K.face[n][i][x]] != X.face[n][i][v]) ok = false;
      if (!ok) continue;
      val[n][x] = v;
      go(n, x + 1);
    }
    val[n][x] = -1;
  };
  go(0, 0);
  return count;
}

uint64_t ndelta_chain_count(int k, int B) {
  auto binom = [](int n, int r) {
    uint64_t b = 1;
    for (int i = 1; i <= r; ++i) b = b * (n - r + i) / i;
    return b;
  };
  // weakly increasing maps a -> b: C(a + b - 1, a), and only the empty map into 0
  auto maps = [&](int a, int b) -> uint64_t { return b == 0 ? (a == 0) : binom(a + b - 1, a); };
  std::vector<uint64_t> ways(B + 1, 1);
  for (int step = 0; step < k; ++step) {
    std::vector<uint64_t> next(B + 1, 0);
    for (int a = 0; a <= B; ++a)
      for (int b = 0; b <= B; ++b) next[b] += ways[a] * maps(a, b);
    ways = next;
  }
  uint64_t total = 0;
  for (uint64_t w : ways) total += w;
  return total;
}

}  // namespace oracle
