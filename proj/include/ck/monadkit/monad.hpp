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

#include <cstdint>
#include <string>
#include <vector>

#include "ck/common.hpp"

namespace ck {

// A carrier is T^depth applied to the finite set of size base. Skeletal
// monads keep depth 0 and replace base by the size of the result.
struct Carrier {
  int depth = 0;
  int base = 0;
  bool operator==(const Carrier& o) const { return depth == o.depth && base == o.base; }
  bool operator!=(const Carrier& o) const { return !(*this == o); }
};

// A monad on finite sets. Elements of a carrier are indices below size().
// Operations on carriers larger than enum_limit() throw ResourceError.
class Monad {
 public:
  virtual ~Monad() = default;
  virtual std::string name() const = 0;
  virtual Carrier apply(Carrier X) const = 0;
  virtual uint64_t size(Carrier X) const = 0;  // saturating
  virtual int unit(Carrier X, int x) const = 0;
  virtual int mult(Carrier X, int e) const = 0;  // e in T(T(X))
  virtual int fmap(Carrier X, Carrier Y, const Fn& h, int e) const = 0;
  virtual std::string show(Carrier X, int e) const;

  Carrier base(int n) const { return {0, n}; }
  Carrier power(int n, int k) const;  // T^k(n)
  int checked_size(Carrier X) const;  // throws ResourceError above enum_limit()
  bool enumerable(Carrier X) const { return size(X) <= enum_limit(); }

  Fn unit_table(Carrier X) const;
  Fn mult_table(Carrier X) const;
  Fn fmap_table(Carrier X, Carrier Y, const Fn& h) const;
};

}  // namespace ck
