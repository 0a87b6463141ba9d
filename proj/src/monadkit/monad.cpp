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

#include "ck/monadkit/monad.hpp"

namespace ck {

std::string Monad::show(Carrier, int e) const { return "#" + std::to_string(e); }

Carrier Monad::power(int n, int k) const {
  Carrier X = base(n);
  for (int i = 0; i < k; ++i) X = apply(X);
  return X;
}

int Monad::checked_size(Carrier X) const {
  uint64_t s = size(X);
  if (s > enum_limit())
    throw ResourceError(name() + ": carrier of size " +
                        (s == UINT64_MAX ? std::string("> 2^64") : std::to_string(s)) +
                        " is too large to enumerate");
  return static_cast<int>(s);
}

Fn Monad::unit_table(Carrier X) const {
  const int n = checked_size(X);
  checked_size(apply(X));
  Fn t(n);
  for (int x = 0; x < n; ++x) t[x] = unit(X, x);
  return t;
}

Fn Monad::mult_table(Carrier X) const {
  const int n = checked_size(apply(apply(X)));
  Fn t(n);
  for (int e = 0; e < n; ++e) t[e] = mult(X, e);
  return t;
}

Fn Monad::fmap_table(Carrier X, Carrier Y, const Fn& h) const {
  const int n = checked_size(apply(X));
  checked_size(apply(Y));
  Fn t(n);
  for (int e = 0; e < n; ++e) t[e] = fmap(X, Y, h, e);
  return t;
}

}  // namespace ck
