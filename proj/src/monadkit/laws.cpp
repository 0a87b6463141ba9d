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

#include "ck/monadkit/laws.hpp"

#include <random>

#include "ck/monadkit/table_monad.hpp"
#include "ck/monadkit/term_monad.hpp"

namespace ck {

void LawReport::fail(std::string msg) {
  ok = false;
  if (violations.size() < 50) violations.push_back(std::move(msg));
}

namespace {

// Index of f in all_functions(n, m).
size_t fn_index(const Fn& f, int m) {
  size_t id = 0;
  for (int v : f) id = id * m + v;
  return id;
}

std::string at(const Monad& M, Carrier X, int e) {
  return "element " + std::to_string(e) + " = " + M.show(X, e);
}

void associativity_by_reduction(const TermMonad& M, int x, const Fn& mu, LawReport& r) {
  auto ax = M.label_axioms();
  for (auto& v : ax.violations) r.fail("label axioms: " + v);
  const Carrier X = M.base(x), TX = M.apply(X);
  const int ttx = M.checked_size(M.apply(TX));
  const int labels = M.policy().labels();
  std::mt19937 rng(20260101u + static_cast<unsigned>(x));
  int valid = 0;
  for (int attempt = 0; attempt < 20000 && valid < 3000; ++attempt) {
    Terms E;
    const int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i)
      E.push_back({static_cast<int>(rng() % ttx), static_cast<int>(rng() % labels)});
    M.normalize(E);
    int lhs_inner;
    try {
      lhs_inner = M.fmap_terms(TX, mu, E);
    } catch (const std::logic_error&) {
      continue;  // E is not an element of T^3(x)
    }
    ++valid;
    ++r.checks;
    const int lhs = M.mult(X, lhs_inner);
    const int rhs = M.mult(X, M.mult_terms(TX, E));
    if (lhs != rhs) r.fail("associativity fails on a sampled element of T^3(" + std::to_string(x) + ")");
  }
  r.notes.push_back("associativity at " + std::to_string(x) +
                    ": T^3 not enumerable; reduced to the label axioms (" +
                    (ax.ok ? "pass" : "fail") + ") plus " + std::to_string(valid) +
                    " sampled elements");
}

}  // namespace

LawReport monad_law_check(const Monad& M, const std::vector<int>& window) {
  LawReport r;
  r.window = window;
  auto checked = [&](const std::string& what, auto&& body) {
    try {
      body();
    } catch (const MissingTable& e) {
      r.notes.push_back(what + " skipped: " + e.what());
    }
  };

  std::map<int, Fn> eta, etaT, mu;
  std::map<std::pair<int, int>, std::vector<Fn>> Th;
  for (int x : window) {
    const Carrier X = M.base(x), TX = M.apply(X);
    checked("unit at " + std::to_string(x), [&] { eta[x] = M.unit_table(X); });
    checked("unit at T(" + std::to_string(x) + ")", [&] { etaT[x] = M.unit_table(TX); });
    checked("multiplication at " + std::to_string(x), [&] { mu[x] = M.mult_table(X); });
    for (int y : window)
      checked("T on " + std::to_string(x) + " -> " + std::to_string(y), [&] {
        std::vector<Fn> tabs;
        for (const Fn& h : all_functions(x, y)) tabs.push_back(M.fmap_table(X, M.base(y), h));
        Th[{x, y}] = std::move(tabs);
      });
  }

  // Functoriality.
  for (int x : window) {
    auto it = Th.find({x, x});
    if (it == Th.end()) continue;
    Fn id(x);
    for (int i = 0; i < x; ++i) id[i] = i;
    const Fn& tid = it->second[fn_index(id, x)];
    for (int e = 0; e < static_cast<int>(tid.size()); ++e, ++r.checks)
      if (tid[e] != e) r.fail("T(id_" + std::to_string(x) + ") moves " + at(M, M.apply(M.base(x)), e));
  }
  for (int x : window)
    for (int y : window)
      for (int z : window) {
        auto a = Th.find({x, y}), b = Th.find({y, z}), c = Th.find({x, z});
        if (a == Th.end() || b == Th.end() || c == Th.end()) continue;
        const auto hs = all_functions(x, y), gs = all_functions(y, z);
        for (size_t i = 0; i < hs.size(); ++i)
          for (size_t j = 0; j < gs.size(); ++j) {
            Fn gh(x);
            for (int v = 0; v < x; ++v) gh[v] = gs[j][hs[i][v]];
            const Fn& tgh = c->second[fn_index(gh, z)];
            const Fn &th = a->second[i], &tg = b->second[j];
            for (size_t e = 0; e < th.size(); ++e, ++r.checks)
              if (tg[th[e]] != tgh[e])
                r.fail("T(g.h) != T(g).T(h) for h=[" + join_ints(hs[i]) + "], g=[" +
                       join_ints(gs[j]) + "] at " + at(M, M.apply(M.base(x)), static_cast<int>(e)));
          }
      }

  // Naturality of eta and mu.
  for (int x : window)
    for (int y : window) {
      auto a = Th.find({x, y});
      if (a == Th.end()) continue;
      const auto hs = all_functions(x, y);
      const Carrier TX = M.apply(M.base(x)), TY = M.apply(M.base(y));
      for (size_t i = 0; i < hs.size(); ++i) {
        const Fn& th = a->second[i];
        if (eta.count(x) && eta.count(y))
          for (int v = 0; v < x; ++v, ++r.checks)
            if (th[eta[x][v]] != eta[y][hs[i][v]])
              r.fail("eta not natural for h=[" + join_ints(hs[i]) + "] at " + std::to_string(v));
        if (!mu.count(x) || !mu.count(y)) continue;
        checked("mu naturality", [&] {
          const int ttx = M.checked_size(M.apply(TX));
          for (int E = 0; E < ttx; ++E, ++r.checks)
            if (th[mu[x][E]] != mu[y][M.fmap(TX, TY, th, E)])
              r.fail("mu not natural for h=[" + join_ints(hs[i]) + "] at " +
                     at(M, M.apply(TX), E));
        });
      }
    }

  // Unit laws and associativity.
  for (int x : window) {
    if (!mu.count(x) || !eta.count(x) || !etaT.count(x)) continue;
    const Carrier X = M.base(x), TX = M.apply(X);
    const int tx = M.checked_size(TX);
    checked("unit laws at " + std::to_string(x), [&] {
      const Fn Teta = M.fmap_table(X, TX, eta[x]);
      for (int t = 0; t < tx; ++t, r.checks += 2) {
        if (mu[x][etaT[x][t]] != t) r.fail("mu.eta_T != id at " + at(M, TX, t));
        if (mu[x][Teta[t]] != t) r.fail("mu.T(eta) != id at " + at(M, TX, t));
      }
    });
    checked("associativity at " + std::to_string(x), [&] {
      const Carrier TTX = M.apply(TX);
      if (M.size(M.apply(TTX)) <= std::min<uint64_t>(enum_limit(), guard_limit())) {
        const Fn muT = M.mult_table(TX);
        const int tttx = M.checked_size(M.apply(TTX));
        for (int E = 0; E < tttx; ++E, ++r.checks)
          if (mu[x][M.fmap(TTX, TX, mu[x], E)] != mu[x][muT[E]])
            r.fail("associativity fails at " + at(M, M.apply(TTX), E));
        return;
      }
      auto term = dynamic_cast<const TermMonad*>(&M);
      if (!term) {
        r.fail("associativity at " + std::to_string(x) + " cannot be checked: T^3 too large");
        return;
      }
      associativity_by_reduction(*term, x, mu[x], r);
    });
  }
  return r;
}

}  // namespace ck
