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

#include "ck/kan/cofinality.hpp"
#include "ck/monadkit/monad.hpp"

namespace ck {

// Witness data for the cobar functor F: Delta -> FinSet, F(card k) = T^k(0),
// on the windows Delta cards {1,2} inside {1,2,3}. Phi = [0] * -, Psi = T,
// sigma the first point, xi the shift onto the last points, tau = T(0 -> d)
// and zeta = eta. The sizes |T^k(0)| for k = 1..3 must be distinct.
CofinalityWitness cobar_cofinality_witness(const Monad& M);

}  // namespace ck
