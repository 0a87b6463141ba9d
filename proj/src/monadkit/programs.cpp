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

#include "ck/monadkit/programs.hpp"

#include <functional>

namespace ck {

std::string program_string(const Program& p) {
  if (p.empty()) return "id";
  std::string s;
  for (const Step& st : p) {
    if (!s.empty()) s += " ";
    s += st.kind == StepKind::Unit ? "eta" : st.kind == StepKind::Mult ? "mu" : "a";
    s += "@" + std::to_string(st.layer);
  }
  return s;
}

int program_output_depth(const Program& p, int d) {
  for (const Step& s : p) {
    const bool ok = s.layer >= 0 && (s.kind == StepKind::Unit   ? s.layer <= d
                                     : s.kind == StepKind::Mult ? s.layer + 2 <= d
                                                                : s.layer + 1 == d);
    if (!ok)
      throw StructureError("step " + program_string({s}) + " does not apply at depth " +
                           std::to_string(d));
    d += s.kind == StepKind::Unit ? 1 : -1;
  }
  return d;
}

Program phi_program(const OrdMap& f) {
  Program p;
  int i = 0;
  for (int j = 0; j < f.cod; ++j) {
    int r = 0;
    while (i < f.dom && f.v[i] == j) ++i, ++r;
    if (r == 0) p.push_back({StepKind::Unit, j});
    for (int k = 1; k < r; ++k) p.push_back({StepKind::Mult, j});
  }
  return p;
}

Program walking_program(const OrdMap& g) {
  if (!g.is_max()) throw StructureError("walking action needs a max-preserving map, got " + g.str());
  auto [f, n] = max_canonical_form(g);
  Program p = phi_program(f);
  // a^{k+1} = a o T(a^k): the innermost action runs first.
  for (int l = f.cod + n - 1; l >= f.cod; --l) p.push_back({StepKind::Act, l});
  return p;
}

ProgramEvaluator::ProgramEvaluator(const Monad& M, int x, const Fn* algebra)
    : M_(M), x_(x), a_(algebra) {
  const uint64_t cap = std::min<uint64_t>(enum_limit(), guard_limit());
  while (max_depth_ < 16 && M_.size(level(max_depth_ + 1)) <= cap) ++max_depth_;
}

const Fn& ProgramEvaluator::table(const Step& s, int d) {
  auto key = std::make_tuple(static_cast<int>(s.kind), s.layer, d);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  Fn t;
  if (s.layer == 0) {
    switch (s.kind) {
      case StepKind::Unit: t = M_.unit_table(level(d)); break;
      case StepKind::Mult: t = M_.mult_table(level(d - 2)); break;
      case StepKind::Act:
        if (!a_) throw StructureError("program uses an algebra but none was given");
        t = *a_;
        break;
    }
  } else {
    const int inner_out = d - 1 + (s.kind == StepKind::Unit ? 1 : -1);
    Fn inner = table({s.kind, s.layer - 1}, d - 1);
    t = M_.fmap_table(level(d - 1), level(inner_out), inner);
  }
  return memo_.emplace(key, std::move(t)).first->second;
}

Fn ProgramEvaluator::run(const Program& p, int d) {
  program_output_depth(p, d);
  Fn out(M_.checked_size(level(d)));
  for (int e = 0; e < static_cast<int>(out.size()); ++e) out[e] = e;
  for (const Step& s : p) {
    const Fn& t = table(s, d);
    for (int& v : out) v = t[v];
    d += s.kind == StepKind::Unit ? 1 : -1;
  }
  return out;
}

namespace {

// Generic values. Lin(v, b) is mu(T(b)(G_v)) for the generic set G_v bound at
// v, with b a function of its element; ActLin(v, w) is a(T(w)(G_v)).
struct Sym;
using SymPtr = std::shared_ptr<const Sym>;
struct Sym {
  enum Kind { Leaf, Wrap, Lin, ActLin } kind;
  int var = 0;
  SymPtr body;
};

SymPtr mk(Sym::Kind k, int var, SymPtr body) {
  return std::make_shared<const Sym>(Sym{k, var, std::move(body)});
}

bool same(const SymPtr& a, const SymPtr& b) {
  if (a == b) return true;
  if (a->kind != b->kind || a->var != b->var) return false;
  if (a->kind == Sym::Leaf) return true;
  return same(a->body, b->body);
}

std::string show(const SymPtr& s) {
  switch (s->kind) {
    case Sym::Leaf: return "z";
    case Sym::Wrap: return "eta(" + show(s->body) + ")";
    case Sym::Lin: return "mu(T(" + show(s->body) + ")G" + std::to_string(s->var) + ")";
    case Sym::ActLin: return "a(T(" + show(s->body) + ")G" + std::to_string(s->var) + ")";
  }
  return "?";
}

SymPtr generic(int d) {
  SymPtr v = mk(Sym::Leaf, 0, nullptr);
  for (int k = 1; k <= d; ++k) v = mk(Sym::Lin, k, mk(Sym::Wrap, 0, v));
  return v;
}

SymPtr rewrite(const Step& s, const SymPtr& v) {
  auto bad = [&]() -> SymPtr {
    throw std::logic_error("generic value " + show(v) + " does not accept " + program_string({s}));
  };
  if (s.layer == 0) {
    switch (s.kind) {
      case StepKind::Unit: return mk(Sym::Wrap, 0, v);
      case StepKind::Mult:
        if (v->kind == Sym::Wrap) return v->body;                     // mu eta = id
        if (v->kind == Sym::Lin) return mk(Sym::Lin, v->var, rewrite(s, v->body));  // associativity
        return bad();
      case StepKind::Act:
        if (v->kind == Sym::Wrap) return v->body;  // a eta = id
        if (v->kind == Sym::Lin) return mk(Sym::ActLin, v->var, rewrite(s, v->body));  // a mu = a T(a)
        return bad();
    }
  }
  const Step inner{s.kind, s.layer - 1};
  if (v->kind == Sym::Wrap) return mk(Sym::Wrap, 0, rewrite(inner, v->body));  // eta natural
  if (v->kind == Sym::Lin) return mk(Sym::Lin, v->var, rewrite(s, v->body));    // mu natural
  return bad();
}

}  // namespace

ProgramEvaluator::Comparison ProgramEvaluator::compare(const Program& p, const Program& q, int d) {
  Comparison c;
  const int dp = program_output_depth(p, d), dq = program_output_depth(q, d);
  if (dp != dq) {
    c.detail = "programs land at different depths";
    return c;
  }
  int top = d;
  for (const Program* pr : {&p, &q}) {
    int cur = d;
    for (const Step& s : *pr) top = std::max(top, cur += s.kind == StepKind::Unit ? 1 : -1);
  }
  if (top <= max_depth_) {
    Fn a = run(p, d), b = run(q, d);
    for (size_t e = 0; e < a.size(); ++e)
      if (a[e] != b[e]) {
        c.detail = "differ at " + M_.show(level(d), static_cast<int>(e)) + ": " +
                   M_.show(level(dp), a[e]) + " vs " + M_.show(level(dp), b[e]);
        return c;
      }
    c.equal = true;
    return c;
  }
  c.symbolic = true;
  SymPtr u = generic(d), v = generic(d);
  for (const Step& s : p) u = rewrite(s, u);
  for (const Step& s : q) v = rewrite(s, v);
  c.equal = same(u, v);
  if (!c.equal) c.detail = "undecided: " + show(u) + " vs " + show(v);
  return c;
}

}  // namespace ck
