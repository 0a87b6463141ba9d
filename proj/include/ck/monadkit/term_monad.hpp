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

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ck/fincat/category.hpp"
#include "ck/monadkit/monad.hpp"

namespace ck {

// One layer of a term monad: an element of T(Y) is a finite list of
// (child in Y, label) pairs, sorted by child, without zero labels.
struct Term {
  int child = 0;
  int label = 0;
  bool operator==(const Term& o) const { return child == o.child && label == o.label; }
};
using Terms = std::vector<Term>;

// Ranking of normalized term lists for one family of monads. Multiplication
// multiplies outer by inner labels and merges equal children with add.
class TermPolicy {
 public:
  virtual ~TermPolicy() = default;
  virtual std::string name() const = 0;
  virtual uint64_t size(uint64_t m) const = 0;  // |T(m)|, saturating
  virtual void decode(int m, int id, Terms& out) const = 0;
  virtual int encode(int m, const Terms& t) const = 0;  // -1 if t is not an element

  virtual int labels() const = 0;
  virtual int one() const = 0;
  virtual int mul(int outer, int inner) const = 0;
  virtual bool merges() const = 0;  // false when no two terms can ever share a child
  virtual int add(int r, int s) const = 0;
  virtual bool is_zero(int r) const = 0;
  virtual std::string label_name(int r) const { return std::to_string(r); }
  virtual std::string format(const Terms& t, const std::vector<std::string>& kids) const;

  // True when T(X) is the set of finite subsets (possibly nonempty) of X.
  virtual bool set_like() const { return false; }

  // Optional fast path for T(h) on ids.
  virtual bool fast_fmap(int, int, const Fn&, int, int&) const { return false; }
};

class TermMonad : public Monad {
 public:
  explicit TermMonad(std::shared_ptr<const TermPolicy> p) : p_(std::move(p)) {}
  std::string name() const override { return p_->name(); }
  Carrier apply(Carrier X) const override { return {X.depth + 1, X.base}; }
  uint64_t size(Carrier X) const override;
  int unit(Carrier X, int x) const override;
  int mult(Carrier X, int e) const override;
  int fmap(Carrier X, Carrier Y, const Fn& h, int e) const override;
  std::string show(Carrier X, int e) const override;

  const TermPolicy& policy() const { return *p_; }
  // Terms of e in T(X), and back; encode normalizes first.
  void decode(Carrier X, int e, Terms& out) const;
  int encode(Carrier X, Terms t) const;

  // mu applied to a combination of elements of T(X).
  int mult_terms(Carrier X, const Terms& outer) const;
  // T(h) applied to a combination of elements of X, landing in T(Y).
  int fmap_terms(Carrier Y, const Fn& h, const Terms& t) const;

  void normalize(Terms& t) const;

  // Semiring axioms on the label set, checked exhaustively: associativity and
  // unit of mul, and when terms merge also associativity and commutativity of
  // add, distributivity on both sides and absorption by zero.
  ValidationReport label_axioms() const;

 private:
  std::shared_ptr<const TermPolicy> p_;
};

}  // namespace ck
