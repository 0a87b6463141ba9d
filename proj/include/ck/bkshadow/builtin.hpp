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

#include "ck/bkshadow/ring.hpp"
#include "ck/monadkit/term_monad.hpp"

namespace ck {

std::shared_ptr<const TermMonad> identity_monad();
std::shared_ptr<const TermMonad> powerset_monad(bool nonempty = false);
std::shared_ptr<const TermMonad> maybe_monad();
std::shared_ptr<const TermMonad> writer_monad(const FiniteMonoid& W);
std::shared_ptr<const TermMonad> affine_span_monad(const FiniteRing& R);

// Names: identity, powerset, nonempty-powerset, maybe, writer:Z/n,
// affine:Z/n or affine:<ring file>. A leading "builtin:" is accepted.
std::shared_ptr<const TermMonad> builtin_monad(const std::string& name);
std::vector<std::string> builtin_names();  // the comparison corpus

// max: P(n) -> n on the chain 0 < 1 < ... < n-1, with max of the empty set 0.
Fn powerset_chain_algebra(int n);

// Coefficient vector of an element of R_a(m), indexed by 0..m-1.
std::vector<int> affine_coefficients(const FiniteRing& R, int m, int id);
int affine_id(const FiniteRing& R, const std::vector<int>& coeff);  // -1 unless the sum is 1

// R_a(X) x R_a(Y) -> R_a(X x Y); the pair (i, j) sits at i * |R_a(Y)| + j and
// (x, y) in X x Y at x * |Y| + y.
Fn r_product_map(const FiniteRing& R, int X, int Y);

}  // namespace ck
