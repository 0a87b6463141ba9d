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
#include <stdexcept>
#include <string>
#include <vector>

namespace ck {

using Fn = std::vector<int>;  // a function between skeletal finite sets

// Raised when an enumeration would exceed the configured element guard.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input data (files, witnesses, tables).
class StructureError : public std::runtime_error {
 public:
  explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

// Candidate guard. Defaults to 10^7, overridden by CK_GUARD.
uint64_t guard_limit();
void set_guard_limit(uint64_t g);

// Largest carrier that is enumerated element by element.
uint64_t enum_limit();

uint64_t ipow(uint64_t base, unsigned exp);  // saturates at UINT64_MAX
uint64_t binomial(unsigned n, unsigned k);

// All functions n -> m in lexicographic order of their value arrays.
std::vector<Fn> all_functions(int n, int m);
bool next_function(Fn& f, int m);

std::string join_ints(const std::vector<int>& v, const char* sep = ",");

}  // namespace ck
