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

#include <optional>
#include <vector>

#include "ck/fincat/category.hpp"

namespace ck {

struct Cone {
  Id apex = -1;
  std::vector<Id> legs;  // legs[j]: apex -> F(j)
};

// Every cone over the diagram with the given apex.
std::vector<Cone> cones_at(const FinFunctor& diagram, Id apex);

// First apex (in object order) carrying a cone through which every cone
// factors uniquely; uniqueness is checked against all cones at all apexes.
std::optional<Cone> limit_in_finite_category(const FinFunctor& diagram);

std::optional<Id> initial_object(const FinCategory& c);
std::optional<Id> terminal_object(const FinCategory& c);
bool is_isomorphism(const FinCategory& c, Id f);
bool objects_isomorphic(const FinCategory& c, Id a, Id b);

}  // namespace ck
