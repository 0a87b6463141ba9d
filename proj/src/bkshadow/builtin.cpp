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

#include "ck/bkshadow/builtin.hpp"

#include <map>

namespace ck {
namespace {

class IdentityPolicy : public TermPolicy {
 public:
  std::string name() const override { return "identity"; }
  uint64_t size(uint64_t m) const override { return m; }
  void decode(int, int id, Terms& out) const override { out.push_back({id, 0}); }
  int encode(int, const Terms& t) const override { return t.size() == 1 ? t[0].child : -1; }
  int labels() const override { return 1; }
  int one() const override { return 0; }
  int mul(int, int) const override { return 0; }
  bool merges() const override { return false; }
  int add(int, int) const override { return 0; }
  bool is_zero(int) const override { return false; }
  std::string format(const Terms&, const std::vector<std::string>& kids) const override {
    return kids[0];
  }
  bool fast_fmap(int, int, const Fn& h, int e, int& out) const override {
    out = h[e];
    return true;
  }
};

// Label 1 marks membership; 0 is the absent label.
class PowersetPolicy : public TermPolicy {
 public:
  explicit PowersetPolicy(bool nonempty) : nonempty_(nonempty) {}
  std::string name() const override { return nonempty_ ? "nonempty-powerset" : "powerset"; }
  uint64_t size(uint64_t m) const override {
    uint64_t s = m >= 64 ? UINT64_MAX : ipow(2, static_cast<unsigned>(m));
    return nonempty_ && s != UINT64_MAX ? s - 1 : s;
  }
  void decode(int, int id, Terms& out) const override {
    uint64_t mask = static_cast<uint64_t>(id) + (nonempty_ ? 1 : 0);
    for (int x = 0; mask; ++x, mask >>= 1)
      if (mask & 1) out.push_back({x, 1});
  }
  int encode(int, const Terms& t) const override {
    if (nonempty_ && t.empty()) return -1;
    uint64_t mask = 0;
    for (const Term& x : t) mask |= uint64_t{1} << x.child;
    return static_cast<int>(mask - (nonempty_ ? 1 : 0));
  }
  int labels() const override { return 2; }
  int one() const override { return 1; }
  int mul(int a, int b) const override { return a & b; }
  bool merges() const override { return true; }
  int add(int a, int b) const override { return a | b; }
  bool is_zero(int r) const override { return r == 0; }
  bool set_like() const override { return true; }
  std::string format(const Terms&, const std::vector<std::string>& kids) const override {
    std::string s = "{";
    for (size_t i = 0; i < kids.size(); ++i) s += (i ? "," : "") + kids[i];
    return s + "}";
  }
  bool fast_fmap(int, int, const Fn& h, int e, int& out) const override {
    uint64_t mask = static_cast<uint64_t>(e) + (nonempty_ ? 1 : 0), img = 0;
    for (int x = 0; mask; ++x, mask >>= 1)
      if (mask & 1) img |= uint64_t{1} << h[x];
    out = static_cast<int>(img - (nonempty_ ? 1 : 0));
    return true;
  }

 private:
  bool nonempty_;
};

class MaybePolicy : public TermPolicy {
 public:
  std::string name() const override { return "maybe"; }
  uint64_t size(uint64_t m) const override { return m == UINT64_MAX ? m : m + 1; }
  void decode(int, int id, Terms& out) const override {
    if (id > 0) out.push_back({id - 1, 0});
  }
  int encode(int, const Terms& t) const override {
    if (t.size() > 1) return -1;
    return t.empty() ? 0 : t[0].child + 1;
  }
  int labels() const override { return 1; }
  int one() const override { return 0; }
  int mul(int, int) const override { return 0; }
  bool merges() const override { return false; }
  int add(int, int) const override { return 0; }
  bool is_zero(int) const override { return false; }
  std::string format(const Terms&, const std::vector<std::string>& kids) const override {
    return kids.empty() ? "nothing" : "just " + kids[0];
  }
};

class WriterPolicy : public TermPolicy {
 public:
  explicit WriterPolicy(FiniteMonoid W) : W_(std::move(W)) {}
  std::string name() const override { return "writer:" + W_.name; }
  uint64_t size(uint64_t m) const override {
    const uint64_t k = W_.size();
    return m != 0 && m > UINT64_MAX / k ? UINT64_MAX : m * k;
  }
  void decode(int, int id, Terms& out) const override {
    out.push_back({id / W_.size(), id % W_.size()});
  }
  int encode(int, const Terms& t) const override {
    return t.size() == 1 ? t[0].child * W_.size() + t[0].label : -1;
  }
  int labels() const override { return W_.size(); }
  int one() const override { return W_.unit; }
  int mul(int a, int b) const override { return W_.op[a][b]; }
  bool merges() const override { return false; }
  int add(int, int) const override { return 0; }
  bool is_zero(int) const override { return false; }
  std::string format(const Terms& t, const std::vector<std::string>& kids) const override {
    return "(" + kids[0] + "," + std::to_string(t[0].label) + ")";
  }

 private:
  FiniteMonoid W_;
};

// Coefficients of the first m-1 points are the base-q digits of the id, the
// first point most significant; the last coefficient makes the sum 1.
class AffinePolicy : public TermPolicy {
 public:
  explicit AffinePolicy(FiniteRing R) : R_(std::move(R)) {}
  std::string name() const override { return "affine:" + R_.name; }
  uint64_t size(uint64_t m) const override {
    if (m == 0) return 0;
    if (m - 1 >= 64) return UINT64_MAX;
    return ipow(R_.size(), static_cast<unsigned>(m - 1));
  }
  void decode(int m, int id, Terms& out) const override {
    auto c = affine_coefficients(R_, m, id);
    for (int x = 0; x < m; ++x)
      if (c[x] != R_.zero) out.push_back({x, c[x]});
  }
  int encode(int m, const Terms& t) const override {
    std::vector<int> c(m, R_.zero);
    for (const Term& x : t) c[x.child] = x.label;
    return affine_id(R_, c);
  }
  int labels() const override { return R_.size(); }
  int one() const override { return R_.one; }
  int mul(int a, int b) const override { return R_.mul[a][b]; }
  bool merges() const override { return true; }
  int add(int a, int b) const override { return R_.add[a][b]; }
  bool is_zero(int r) const override { return r == R_.zero; }
  std::string label_name(int r) const override { return R_.elements[r]; }

 private:
  FiniteRing R_;
};

}  // namespace

std::vector<int> affine_coefficients(const FiniteRing& R, int m, int id) {
  std::vector<int> c(m, R.zero);
  if (m == 0) return c;
  const int q = R.size();
  int sum = R.zero;
  for (int x = m - 2; x >= 0; --x) {
    c[x] = id % q;
    id /= q;
    sum = R.add[sum][c[x]];
  }
  c[m - 1] = R.sub(R.one, sum);
  return c;
}

int affine_id(const FiniteRing& R, const std::vector<int>& coeff) {
  const int m = static_cast<int>(coeff.size());
  int sum = R.zero;
  for (int r : coeff) sum = R.add[sum][r];
  if (m == 0 || sum != R.one) return -1;
  int id = 0;
  for (int x = 0; x + 1 < m; ++x) id = id * R.size() + coeff[x];
  return id;
}

std::shared_ptr<const TermMonad> identity_monad() {
  return std::make_shared<TermMonad>(std::make_shared<IdentityPolicy>());
}
std::shared_ptr<const TermMonad> powerset_monad(bool nonempty) {
  return std::make_shared<TermMonad>(std::make_shared<PowersetPolicy>(nonempty));
}
std::shared_ptr<const TermMonad> maybe_monad() {
  return std::make_shared<TermMonad>(std::make_shared<MaybePolicy>());
}
std::shared_ptr<const TermMonad> writer_monad(const FiniteMonoid& W) {
  auto v = validate_monoid(W);
  if (!v.ok) throw StructureError("writer monoid: " + v.violations.front());
  return std::make_shared<TermMonad>(std::make_shared<WriterPolicy>(W));
}
std::shared_ptr<const TermMonad> affine_span_monad(const FiniteRing& R) {
  auto v = validate_ring(R);
  if (!v.ok) throw StructureError("ring: " + v.violations.front());
  return std::make_shared<TermMonad>(std::make_shared<AffinePolicy>(R));
}

std::shared_ptr<const TermMonad> builtin_monad(const std::string& spec) {
  std::string name = spec.rfind("builtin:", 0) == 0 ? spec.substr(8) : spec;
  if (name == "identity") return identity_monad();
  if (name == "powerset") return powerset_monad(false);
  if (name == "nonempty-powerset") return powerset_monad(true);
  if (name == "maybe") return maybe_monad();
  if (name.rfind("writer:", 0) == 0) {
    FiniteRing R = parse_ring(name.substr(7));
    FiniteMonoid W;
    W.name = R.name;
    W.op = R.add;
    W.unit = R.zero;
    return writer_monad(W);
  }
  if (name.rfind("affine:", 0) == 0) return affine_span_monad(parse_ring(name.substr(7)));
  throw StructureError("unknown monad '" + spec + "'");
}

std::vector<std::string> builtin_names() {
  return {"identity", "powerset", "nonempty-powerset", "maybe", "writer:Z/2", "affine:Z/2"};
}

Fn powerset_chain_algebra(int n) {
  Fn a(static_cast<size_t>(1) << n, 0);
  for (size_t m = 1; m < a.size(); ++m)
    for (int b = 0; b < n; ++b)
      if (m >> b & 1) a[m] = b;
  return a;
}

Fn r_product_map(const FiniteRing& R, int X, int Y) {
  auto Ra = affine_span_monad(R);
  const int nx = Ra->checked_size({1, X}), ny = Ra->checked_size({1, Y});
  Ra->checked_size({1, X * Y});
  Fn out(static_cast<size_t>(nx) * ny);
  for (int i = 0; i < nx; ++i) {
    auto a = affine_coefficients(R, X, i);
    for (int j = 0; j < ny; ++j) {
      auto b = affine_coefficients(R, Y, j);
      std::vector<int> c(static_cast<size_t>(X) * Y);
      for (int x = 0; x < X; ++x)
        for (int y = 0; y < Y; ++y) c[x * Y + y] = R.mul[a[x]][b[y]];
      out[static_cast<size_t>(i) * ny + j] = affine_id(R, c);
    }
  }
  return out;
}

}  // namespace ck
