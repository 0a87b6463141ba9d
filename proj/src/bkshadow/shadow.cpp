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

#include "ck/bkshadow/shadow.hpp"

#include <algorithm>

#include "ck/bkshadow/builtin.hpp"

namespace ck {

namespace {

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  for (int x : a)
    if (std::find(b.begin(), b.end(), x) == b.end()) return false;
  return true;
}

}  // namespace

ShadowReport kR_shadow(const FiniteRing& R, const std::vector<int>& window) {
  ShadowReport r;
  r.ring = R.name;
  r.window = window;
  auto M = affine_span_monad(R);
  for (int x : window) r.sizes.push_back(M->size(M->apply(M->base(x))));
  r.isar = isar_chain_check(*M, window, 2);
  r.spectrum = r.isar.A;
  r.empty_admitted = std::find(r.spectrum.begin(), r.spectrum.end(), 0) != r.spectrum.end();
  r.sandwich = subset(r.isar.I, r.isar.A) && subset(r.isar.A, r.isar.R);
  if (!r.sandwich) r.violations.push_back("I(R_a) within A(R_a) within R(R_a) fails on the window");
  for (const auto& v : r.isar.violations) r.violations.push_back(v);
  if (std::find(window.begin(), window.end(), 0) != window.end() && !r.empty_admitted)
    r.violations.push_back("the empty set carries no structure map");
  return r;
}

TruncatedSSet levelwise_affine(const TruncatedSSet& X, const FiniteRing& R) {
  auto M = affine_span_monad(R);
  TruncatedSSet Y;
  Y.name = "R_a(" + X.name + ")";
  Y.N = X.N;
  for (int n = 0; n <= X.N; ++n) {
    const int m = X.size(n);
    const int count = M->checked_size(M->apply(M->base(m)));
    std::vector<std::string> ids;
    for (int e = 0; e < count; ++e) {
      const std::vector<int> c = affine_coefficients(R, m, e);
      std::string s;
      for (int x = 0; x < m; ++x) {
        if (c[x] == R.zero) continue;
        if (!s.empty()) s += " + ";
        s += (c[x] == R.one ? "" : R.elements[c[x]] + "*") + X.simplices[n][x];
      }
      ids.push_back(s);
    }
    Y.simplices.push_back(std::move(ids));
  }
  Y.face.resize(X.N + 1);
  Y.degen.resize(X.N + 1);
  for (int n = 0; n <= X.N; ++n) {
    for (int i = 0; n >= 1 && i <= n; ++i)
      Y.face[n].push_back(M->fmap_table(M->base(X.size(n)), M->base(X.size(n - 1)), X.face[n][i]));
    for (int i = 0; n < X.N && i <= n; ++i)
      Y.degen[n].push_back(M->fmap_table(M->base(X.size(n)), M->base(X.size(n + 1)), X.degen[n][i]));
  }
  return Y;
}

}  // namespace ck
