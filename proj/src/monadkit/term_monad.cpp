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

#include "ck/monadkit/term_monad.hpp"

#include <algorithm>
#include <stdexcept>

namespace ck {

std::string TermPolicy::format(const Terms& t, const std::vector<std::string>& kids) const {
  std::string s = "[";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += " + ";
    s += label_name(t[i].label) + "*" + kids[i];
  }
  return s + "]";
}

uint64_t TermMonad::size(Carrier X) const {
  uint64_t s = static_cast<uint64_t>(X.base);
  for (int d = 0; d < X.depth; ++d) s = p_->size(s);
  return s;
}

void TermMonad::decode(Carrier X, int e, Terms& out) const {
  out.clear();
  p_->decode(checked_size(X), e, out);
}

void TermMonad::normalize(Terms& t) const {
  std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return a.child < b.child; });
  if (p_->merges()) {
    size_t w = 0;
    for (size_t r = 0; r < t.size(); ++r) {
      if (w > 0 && t[w - 1].child == t[r].child)
        t[w - 1].label = p_->add(t[w - 1].label, t[r].label);
      else
        t[w++] = t[r];
    }
    t.resize(w);
  }
  t.erase(std::remove_if(t.begin(), t.end(), [&](const Term& x) { return p_->is_zero(x.label); }),
          t.end());
}

int TermMonad::encode(Carrier X, Terms t) const {
  normalize(t);
  const int m = checked_size(X);
  checked_size(apply(X));
  int id = p_->encode(m, t);
  if (id < 0) throw std::logic_error(name() + ": term list is not an element");
  return id;
}

int TermMonad::unit(Carrier X, int x) const { return encode(X, {{x, p_->one()}}); }

int TermMonad::mult_terms(Carrier X, const Terms& outer) const {
  Terms flat, inner;
  for (const Term& o : outer) {
    decode(X, o.child, inner);
    for (const Term& i : inner) flat.push_back({i.child, p_->mul(o.label, i.label)});
  }
  return encode(X, std::move(flat));
}

int TermMonad::mult(Carrier X, int e) const {
  Terms outer;
  decode(apply(X), e, outer);
  return mult_terms(X, outer);
}

int TermMonad::fmap_terms(Carrier Y, const Fn& h, const Terms& t) const {
  Terms out;
  out.reserve(t.size());
  for (const Term& x : t) out.push_back({h[x.child], x.label});
  return encode(Y, std::move(out));
}

int TermMonad::fmap(Carrier X, Carrier Y, const Fn& h, int e) const {
  int out;
  if (p_->fast_fmap(checked_size(X), checked_size(Y), h, e, out)) return out;
  Terms t;
  decode(X, e, t);
  return fmap_terms(Y, h, t);
}

std::string TermMonad::show(Carrier X, int e) const {
  if (X.depth == 0) return std::to_string(e);
  const Carrier Y{X.depth - 1, X.base};
  Terms t;
  decode(Y, e, t);
  std::vector<std::string> kids;
  for (const Term& x : t) kids.push_back(show(Y, x.child));
  return p_->format(t, kids);
}

ValidationReport TermMonad::label_axioms() const {
  ValidationReport r;
  const int L = p_->labels();
  const int e = p_->one();
  for (int a = 0; a < L; ++a) {
    if (p_->mul(e, a) != a || p_->mul(a, e) != a) r.fail("label " + p_->label_name(a) + " breaks the unit");
    for (int b = 0; b < L; ++b)
      for (int c = 0; c < L; ++c)
        if (p_->mul(p_->mul(a, b), c) != p_->mul(a, p_->mul(b, c)))
          r.fail("label multiplication not associative at " + p_->label_name(a) + "," +
                 p_->label_name(b) + "," + p_->label_name(c));
  }
  if (!p_->merges()) return r;
  for (int a = 0; a < L; ++a)
    for (int b = 0; b < L; ++b) {
      if (p_->add(a, b) != p_->add(b, a)) r.fail("label addition not commutative");
      if (p_->is_zero(a) && !p_->is_zero(p_->mul(a, b))) r.fail("zero label does not absorb");
      if (p_->is_zero(b) && !p_->is_zero(p_->mul(a, b))) r.fail("zero label does not absorb");
      for (int c = 0; c < L; ++c) {
        if (p_->add(p_->add(a, b), c) != p_->add(a, p_->add(b, c)))
          r.fail("label addition not associative");
        if (p_->mul(a, p_->add(b, c)) != p_->add(p_->mul(a, b), p_->mul(a, c)))
          r.fail("left distributivity fails");
        if (p_->mul(p_->add(a, b), c) != p_->add(p_->mul(a, c), p_->mul(b, c)))
          r.fail("right distributivity fails");
      }
    }
  return r;
}

}  // namespace ck
