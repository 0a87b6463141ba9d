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

#include "ck/common.hpp"

#include <cstdlib>
#include <limits>

namespace ck {

namespace {
uint64_t g_guard = 0;
}

uint64_t guard_limit() {
  if (g_guard == 0) {
    g_guard = 10000000ULL;
    if (const char* env = std::getenv("CK_GUARD")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && v > 0) g_guard = v;
    }
  }
  return g_guard;
}

void set_guard_limit(uint64_t g) { g_guard = g; }

uint64_t enum_limit() { return 1ULL << 17; }

uint64_t ipow(uint64_t base, unsigned exp) {
  uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<uint64_t>::max() / base)
      return std::numeric_limits<uint64_t>::max();
    r *= base;
  }
  return r;
}

uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

bool next_function(Fn& f, int m) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    if (f[i] + 1 < m) {
      ++f[i];
      for (size_t j = i + 1; j < f.size(); ++j) f[j] = 0;
      return true;
    }
  }
  return false;
}

std::vector<Fn> all_functions(int n, int m) {
  std::vector<Fn> out;
  if (n > 0 && m == 0) return out;
  Fn f(n, 0);
  do {
    out.push_back(f);
  } while (next_function(f, m));
  return out;
}

std::string join_ints(const std::vector<int>& v, const char* sep) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace ck
