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

#include <string>
#include <vector>

#include "ck/fincat/category.hpp"
#include "ck/fincat/io.hpp"

namespace ck {

// A finite commutative ring on elements 0..q-1.
struct FiniteRing {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::vector<int>> add;
  std::vector<std::vector<int>> mul;
  int zero = 0;
  int one = 1;

  int size() const { return static_cast<int>(elements.size()); }
  int neg(int a) const;
  int sub(int a, int b) const { return add[a][neg(b)]; }
};

FiniteRing integers_mod(int n);  // n >= 2
// "Z/n" or a table document {"elements", "add", "mul", "zero", "one"}.
FiniteRing ring_from_json(const json& j);
FiniteRing parse_ring(const std::string& spec);
ValidationReport validate_ring(const FiniteRing& R);

// A finite monoid on 0..k-1, used by the writer monad.
struct FiniteMonoid {
  std::string name;
  std::vector<std::vector<int>> op;
  int unit = 0;
  int size() const { return static_cast<int>(op.size()); }
};
FiniteMonoid additive_monoid(int n);  // Z/n under addition
FiniteMonoid trivial_monoid();
ValidationReport validate_monoid(const FiniteMonoid& M);

}  // namespace ck
