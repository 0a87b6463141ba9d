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

#include "ck/monadkit/algebra.hpp"

#include <algorithm>
#include <functional>

#include "ck/monadkit/programs.hpp"
#include "ck/monadkit/term_monad.hpp"

namespace ck {
namespace {

// a(mu E) = a(T(a) E); kids are the elements of T(x) occurring in E.
struct Constraint {
  std::vector<int> kids;
  Terms terms;
  int mu = 0;
};

class AlgebraSolver {
 public:
  AlgebraSolver(const TermMonad& M, int x, std::vector<Constraint> cons, size_t limit,
                AlgebraSearch& out)
      : M_(M), x_(x), limit_(limit), out_(out), cons_(std::move(cons)) {
    const Carrier X = M.base(x);
    n_ = M.checked_size(M.apply(X));
    fixed_.assign(n_, -1);
    for (int v = 0; v < x; ++v) fixed_[M.unit(X, v)] = v;
    watch_.assign(n_ + 1, {});
    dyn_.assign(n_ + 1, {});
    for (size_t k = 0; k < cons_.size(); ++k) {
      const auto& kids = cons_[k].kids;
      watch_[kids.empty() ? 0 : kids.back()].push_back(static_cast<int>(k));
    }
    a_.assign(n_, -1);
  }

  void run() { dfs(0); }

 private:
  bool settle(int v, std::vector<int>& pushed) {
    for (int k : watch_[v]) {
      const Constraint& c = cons_[k];
      const int t = M_.fmap_terms(M_.base(x_), a_, c.terms);
      const int u = std::max(t, c.mu);
      if (u <= v) {
        if (a_[t] != a_[c.mu]) return false;
      } else {
        dyn_[u].push_back({t, c.mu});
        pushed.push_back(u);
      }
    }
    for (auto [t, m] : dyn_[v])
      if (a_[t] != a_[m]) return false;
    return true;
  }

  bool dfs(int v) {
    if (++out_.nodes > guard_limit())
      throw ResourceError("algebra search at " + std::to_string(x_) + " exceeded " +
                          std::to_string(guard_limit()) + " nodes");
    if (v == n_) {
      out_.found.push_back({x_, a_});
      if (limit_ && out_.found.size() >= limit_) {
        out_.complete = false;
        return false;
      }
      return true;
    }
    const int lo = fixed_[v] >= 0 ? fixed_[v] : 0;
    const int hi = fixed_[v] >= 0 ? fixed_[v] + 1 : x_;
    for (int val = lo; val < hi; ++val) {
      a_[v] = val;
      std::vector<int> pushed;
      const bool ok = settle(v, pushed);
      bool go = true;
      if (ok) go = dfs(v + 1);
      for (int u : pushed) dyn_[u].pop_back();
      if (!go) {
        a_[v] = -1;
        return false;
      }
    }
    a_[v] = -1;
    return true;
  }

  const TermMonad& M_;
  int x_;
  size_t limit_;
  AlgebraSearch& out_;
  std::vector<Constraint> cons_;
  int n_ = 0;
  Fn fixed_, a_;
  std::vector<std::vector<int>> watch_;
  std::vector<std::vector<std::pair<int, int>>> dyn_;
};

Constraint make_constraint(Terms terms, int mu) {
  Constraint c;
  c.terms = std::move(terms);
  for (const Term& t : c.terms) c.kids.push_back(t.child);
  std::sort(c.kids.begin(), c.kids.end());
  c.kids.erase(std::unique(c.kids.begin(), c.kids.end()), c.kids.end());
  c.mu = mu;
  return c;
}

AlgebraSearch term_search(const TermMonad& M, int x, size_t limit, bool force_binary) {
  AlgebraSearch out;
  const Carrier X = M.base(x), TX = M.apply(X);
  const int tx = M.checked_size(TX);
  std::vector<Constraint> cons;
  if (!(force_binary && M.policy().set_like()) && M.enumerable(M.apply(TX))) {
    const int ttx = M.checked_size(M.apply(TX));
    Terms t;
    for (int E = 0; E < ttx; ++E) {
      M.decode(TX, E, t);
      cons.push_back(make_constraint(t, M.mult(X, E)));
    }
  } else if (M.policy().set_like()) {
    out.binary = true;
    const int one = M.policy().one();
    for (int s = 0; s < tx; ++s)
      for (int u = s + 1; u < tx; ++u) {
        Terms E{{s, one}, {u, one}};
        cons.push_back(make_constraint(E, M.mult_terms(X, E)));
      }
  } else {
    M.checked_size(M.apply(TX));  // throws the resource error
  }
  AlgebraSolver(M, x, std::move(cons), limit, out).run();
  return out;
}

}  // namespace

AlgebraSearch algebra_search(const Monad& M, int x, size_t limit, bool force_binary) {
  if (auto term = dynamic_cast<const TermMonad*>(&M)) return term_search(*term, x, limit, force_binary);
  // Tabulated monads: enumerate every a fixing the Diracs.
  AlgebraSearch out;
  const Carrier X = M.base(x), TX = M.apply(X);
  const int tx = M.checked_size(TX);
  const Fn eta = M.unit_table(X);
  const Fn mu = M.mult_table(X);
  Fn fixed(tx, -1);
  for (int v = 0; v < x; ++v) fixed[eta[v]] = v;
  std::vector<int> free;
  for (int t = 0; t < tx; ++t)
    if (fixed[t] < 0) free.push_back(t);
  if (x == 0 && !free.empty()) return out;
  if (ipow(x, static_cast<unsigned>(free.size())) > guard_limit())
    throw ResourceError("algebra search at " + std::to_string(x) + " has too many candidates");
  Fn a = fixed;
  std::vector<int> digits(free.size(), 0);
  while (true) {
    for (size_t i = 0; i < free.size(); ++i) a[free[i]] = digits[i];
    ++out.nodes;
    bool ok = true;
    for (int E = 0; ok && E < static_cast<int>(mu.size()); ++E)
      ok = a[mu[E]] == a[M.fmap(TX, X, a, E)];
    if (ok) {
      out.found.push_back({x, a});
      if (limit && out.found.size() >= limit) {
        out.complete = false;
        break;
      }
    }
    size_t i = free.size();
    while (i > 0 && ++digits[i - 1] == x) digits[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

bool is_algebra(const Monad& M, int x, const Fn& a, std::string* why) {
  const Carrier X = M.base(x), TX = M.apply(X);
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (static_cast<int>(a.size()) != M.checked_size(TX)) return fail("structure map has the wrong size");
  for (int v = 0; v < x; ++v)
    if (a[M.unit(X, v)] != v) return fail("a.eta moves " + std::to_string(v));
  const int ttx = M.checked_size(M.apply(TX));
  for (int E = 0; E < ttx; ++E)
    if (a[M.mult(X, E)] != a[M.fmap(TX, X, a, E)])
      return fail("a.mu != a.T(a) at " + M.show(M.apply(TX), E));
  return true;
}

std::optional<RetractWitness> retract_membership(const Monad& M, int x,
                                                 const std::vector<int>& window) {
  std::vector<int> cs = window;
  std::sort(cs.begin(), cs.end());
  for (int c : cs) {
    const uint64_t tc = M.size(M.apply(M.base(c)));
    if (x == 0 ? tc != 0 : tc < static_cast<uint64_t>(x)) continue;
    RetractWitness w;
    w.c = c;
    const int n = M.checked_size(M.apply(M.base(c)));
    for (int v = 0; v < x; ++v) w.section.push_back(v);
    for (int y = 0; y < n; ++y) w.retraction.push_back(y < x ? y : 0);
    // r' = r . mu_c . T(s) on T(x).
    const Carrier X = M.base(x), C = M.base(c), TC = M.apply(C);
    const int tx = M.checked_size(M.apply(X));
    M.checked_size(M.apply(TC));
    for (int t = 0; t < tx; ++t) w.left_inverse.push_back(w.retraction[M.mult(C, M.fmap(X, TC, w.section, t))]);
    w.verified = true;
    for (int v = 0; v < x; ++v) w.verified = w.verified && w.left_inverse[M.unit(X, v)] == v;
    for (int v = 0; v < x; ++v) w.verified = w.verified && w.retraction[w.section[v]] == v;
    return w;
  }
  return std::nullopt;
}

namespace {

struct Relation {
  std::string name;
  Program lhs, rhs;
  int depth;
};

std::vector<Relation> splitting_relations(int t) {
  using K = StepKind;
  std::vector<Relation> r;
  for (int n = 0; n <= t; ++n) {
    r.push_back({"s" + std::to_string(n) + "d" + std::to_string(n) + " = id",
                 {{K::Unit, n}, {K::Act, n}}, {}, n});
    for (int i = 0; i < n; ++i)
      r.push_back({"s" + std::to_string(n) + "d" + std::to_string(i) + " = d" + std::to_string(i) + "s" +
                       std::to_string(n - 1),
                   {{K::Unit, i}, {K::Act, n}}, {{K::Act, n - 1}, {K::Unit, i}}, n});
  }
  for (int n = 0; n < t; ++n) {
    for (int j = 0; j < n; ++j)
      r.push_back({"s" + std::to_string(n) + "sigma" + std::to_string(j) + " = sigma" + std::to_string(j) +
                       "s" + std::to_string(n + 1),
                   {{K::Mult, j}, {K::Act, n}}, {{K::Act, n + 1}, {K::Mult, j}}, n + 2});
    r.push_back({"s" + std::to_string(n) + "sigma" + std::to_string(n) + " = s" + std::to_string(n) + "s" +
                     std::to_string(n + 1),
                 {{K::Mult, n}, {K::Act, n}}, {{K::Act, n + 1}, {K::Act, n}}, n + 2});
  }
  return r;
}

// Level-by-level search. Level n is constrained by pins from the cofaces and
// by the relations tying it to level n - 1.
class SplitSearch {
 public:
  SplitSearch(const Monad& M, int c, int t) : M_(M), ev_(M, c), c_(c), t_(t) {}

  bool run(std::vector<Fn>& out) {
    std::vector<Fn> s;
    return level(0, s, out);
  }

 private:
  int sz(int d) { return M_.checked_size(M_.power(c_, d)); }
  Fn step(StepKind k, int layer, int d) { return ev_.run({{k, layer}}, d); }

  // Admissible values of s^n at every element of T^{n+1}(c). With only_first
  // each list holds at most one value. Returns false when some list is empty.
  bool admissible(int n, const std::vector<Fn>& s, bool only_first,
                  std::vector<std::vector<int>>& res) {
    const int top = sz(n + 1), bot = sz(n);
    Fn pinned(top, -1);
    auto pin = [&](int e, int v) {
      if (pinned[e] >= 0 && pinned[e] != v) return false;
      pinned[e] = v;
      return true;
    };
    const Fn dn = step(StepKind::Unit, n, n);
    for (int y = 0; y < bot; ++y)
      if (!pin(dn[y], y)) return false;
    for (int i = 0; i < n; ++i) {
      const Fn di = step(StepKind::Unit, i, n), di_low = step(StepKind::Unit, i, n - 1);
      for (int y = 0; y < bot; ++y)
        if (!pin(di[y], di_low[s[n - 1][y]])) return false;
    }
    // s^m sigma^j = sigma^j s^n for j < m, and s^m sigma^m = s^m s^n.
    const int m = n - 1;
    std::vector<Fn> hi, lo;
    std::vector<std::vector<int>> pre;  // preimages of s^m
    if (n >= 1) {
      for (int j = 0; j <= m; ++j) hi.push_back(step(StepKind::Mult, j, n + 1));
      for (int j = 0; j < m; ++j) lo.push_back(step(StepKind::Mult, j, n));
      pre.assign(sz(m), {});
      for (int y = 0; y < bot; ++y) pre[s[m][y]].push_back(y);
    }
    std::vector<int> all(bot);
    for (int y = 0; y < bot; ++y) all[y] = y;
    res.assign(top, {});
    for (int E = 0; E < top; ++E) {
      const std::vector<int>* cand = &all;
      std::vector<int> one;
      if (pinned[E] >= 0) {
        one.push_back(pinned[E]);
        cand = &one;
      } else if (n >= 1) {
        cand = &pre[s[m][hi[m][E]]];
      }
      for (int y : *cand) {
        bool ok = n < 1 || s[m][y] == s[m][hi[m][E]];
        for (int j = 0; ok && j < m; ++j) ok = lo[j][y] == s[m][hi[j][E]];
        if (!ok) continue;
        res[E].push_back(y);
        if (only_first) break;
      }
      if (res[E].empty()) return false;
    }
    return true;
  }

  bool level(int n, std::vector<Fn>& s, std::vector<Fn>& out) {
    std::vector<std::vector<int>> adm;
    if (!admissible(n, s, n == t_, adm)) return false;
    Fn first(adm.size());
    for (size_t e = 0; e < adm.size(); ++e) first[e] = adm[e][0];
    if (n == t_) {
      out = s;
      out.push_back(first);
      return true;
    }
    uint64_t count = 1;
    for (auto& v : adm)
      count = count > guard_limit() / v.size() ? guard_limit() + 1 : count * v.size();
    if (count > guard_limit())
      throw ResourceError("splitting search at " + std::to_string(c_) + " level " +
                          std::to_string(n) + " has too many candidates");
    std::vector<size_t> idx(adm.size(), 0);
    while (true) {
      Fn cand(adm.size());
      for (size_t e = 0; e < adm.size(); ++e) cand[e] = adm[e][idx[e]];
      if (++nodes_ > guard_limit()) throw ResourceError("splitting search exceeded the guard");
      s.push_back(cand);
      if (level(n + 1, s, out)) return true;
      s.pop_back();
      size_t i = adm.size();
      while (i > 0 && ++idx[i - 1] == adm[i - 1].size()) idx[--i] = 0;
      if (i == 0) return false;
    }
  }

  const Monad& M_;
  ProgramEvaluator ev_;
  int c_, t_;
  uint64_t nodes_ = 0;
};

}  // namespace

Splitting split_resolution_search(const Monad& M, int c, int t, const AlgebraStructure* algebra) {
  Splitting r;
  if (algebra) {
    r.from_algebra = true;
    ProgramEvaluator ev(M, c, &algebra->a);
    for (const Relation& rel : splitting_relations(t)) {
      auto cmp = ev.compare(rel.lhs, rel.rhs, rel.depth);
      ++r.relations;
      r.symbolic = r.symbolic || cmp.symbolic;
      if (!cmp.equal) {
        r.detail = rel.name + ": " + cmp.detail;
        return r;
      }
    }
    r.found = true;
    if (ev.enumerable_depth() >= t + 1)
      for (int n = 0; n <= t; ++n) r.s.push_back(ev.run({{StepKind::Act, n}}, n + 1));
    return r;
  }
  SplitSearch search(M, c, t);
  r.found = search.run(r.s);
  r.relations = static_cast<int>(splitting_relations(t).size());
  if (!r.found) r.detail = "no tables satisfy the relations";
  return r;
}

IsarReport isar_chain_check(const Monad& M, const std::vector<int>& window, int t) {
  IsarReport rep;
  rep.window = window;
  rep.depth = t;
  auto in = [](const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); };
  for (int c : window) {
    const uint64_t tc = M.size(M.apply(M.base(c)));
    if (tc <= static_cast<uint64_t>(INT32_MAX) && in(window, static_cast<int>(tc)) &&
        !in(rep.I, static_cast<int>(tc)))
      rep.I.push_back(static_cast<int>(tc));
  }
  std::sort(rep.I.begin(), rep.I.end());
  for (int x : window) {
    AlgebraSearch alg = algebra_search(M, x, 1);
    if (alg.binary) rep.notes.push_back("algebras at " + std::to_string(x) + ": binary unions only");
    const bool inA = !alg.found.empty();
    if (inA) rep.A.push_back(x);
    Splitting sp;
    try {
      sp = split_resolution_search(M, x, t, inA ? &alg.found[0] : nullptr);
    } catch (const ResourceError& e) {
      rep.notes.push_back("splitting at " + std::to_string(x) + ": " + e.what());
      sp.found = false;
      sp.detail = "not decided";
    }
    if (sp.symbolic) rep.notes.push_back("splitting at " + std::to_string(x) + ": decided on generic elements");
    if (sp.found) rep.S.push_back(x);
    if (auto w = retract_membership(M, x, window)) {
      rep.R.push_back(x);
      if (!w->verified) rep.violations.push_back("left inverse of eta at " + std::to_string(x) + " fails");
      rep.retracts.push_back(*w);
    }
    if (inA && !sp.found) rep.violations.push_back("A not in S at " + std::to_string(x) + ": " + sp.detail);
  }
  for (int x : rep.I)
    if (!in(rep.A, x)) rep.violations.push_back("I not in A at " + std::to_string(x));
  for (int x : rep.S)
    if (!in(rep.R, x)) rep.violations.push_back("S not in R at " + std::to_string(x));
  return rep;
}

}  // namespace ck
