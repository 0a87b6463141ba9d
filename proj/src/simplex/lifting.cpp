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

#include "ck/simplex/lifting.hpp"

#include <functional>

namespace ck {

HornClass parse_horn_class(const std::string& s) {
  if (s == "kan") return HornClass::Kan;
  if (s == "inner") return HornClass::Inner;
  if (s == "left") return HornClass::Left;
  if (s == "right") return HornClass::Right;
  throw StructureError("unknown horn class " + s + " (kan, inner, left, right)");
}

std::string horn_class_name(HornClass c) {
  switch (c) {
    case HornClass::Kan: return "kan";
    case HornClass::Inner: return "inner";
    case HornClass::Left: return "left";
    case HornClass::Right: return "right";
  }
  return "?";
}

bool horn_allowed(HornClass c, int n, int i) {
  switch (c) {
    case HornClass::Kan: return true;
    case HornClass::Inner: return 0 < i && i < n;
    case HornClass::Left: return i < n;
    case HornClass::Right: return i > 0;
  }
  return false;
}

std::string LiftingReport::stamp() const {
  return "evidence up to dimension " + std::to_string(max_dim) + " (" + horn_class_name(cls) + " horns)";
}

std::vector<std::vector<int>> horn_tuples(const TruncatedSSet& X, int n, int i) {
  std::vector<std::vector<int>> out;
  std::vector<int> faces(n + 1, -1);
  std::function<void(int)> fill = [&](int k) {
    if (k > n) {
      std::vector<int> t;
      for (int j = 0; j <= n; ++j)
        if (j != i) t.push_back(faces[j]);
      out.push_back(std::move(t));
      if (out.size() > guard_limit()) throw ResourceError("horn tuples exceed the guard");
      return;
    }
    if (k == i) return fill(k + 1);
    for (int x = 0; x < X.size(n - 1); ++x) {
      bool ok = true;
      // d_j x_k = d_(k-1) x_j for j < k
      for (int j = 0; j < k && ok && n >= 2; ++j)
        if (j != i && X.d(n - 1, j, x) != X.d(n - 1, k - 1, faces[j])) ok = false;
      if (!ok) continue;
      faces[k] = x;
      fill(k + 1);
    }
    faces[k] = -1;
  };
  fill(0);
  return out;
}

LiftingReport horn_lifting_check(const SimplicialMap& p, HornClass cls, int max_dim) {
  const TruncatedSSet &E = *p.dom, &B = *p.cod;
  if (E.N < max_dim || B.N < max_dim)
    throw StructureError("lifting check needs both sides truncated at dimension " + std::to_string(max_dim));
  LiftingReport r;
  r.max_dim = max_dim;
  r.cls = cls;
  for (int n = 1; n <= max_dim; ++n) {
    for (int i = 0; i <= n; ++i) {
      if (!horn_allowed(cls, n, i)) continue;
      HornTally tally{n, i, 0, 0};
      const int first = i == 0 ? 1 : 0;
      // candidates indexed by the first listed face
      std::vector<std::vector<int>> by_face(E.size(n - 1));
      for (int e = 0; e < E.size(n); ++e) by_face[E.d(n, first, e)].push_back(e);
      for (const auto& t : horn_tuples(E, n, i)) {
        std::vector<int> face(n + 1, -1);
        for (int j = 0, k = 0; j <= n; ++j)
          if (j != i) face[j] = t[k++];
        for (int b = 0; b < B.size(n); ++b) {
          bool over = true;
          for (int j = 0; j <= n && over; ++j)
            if (j != i && B.d(n, j, b) != p.level[n - 1][face[j]]) over = false;
          if (!over) continue;
          ++tally.instances;
          bool filled = false;
          for (int e : by_face[face[first]]) {
            if (p.level[n][e] != b) continue;
            bool match = true;
            for (int j = 0; j <= n && match; ++j)
              if (j != i && E.d(n, j, e) != face[j]) match = false;
            if (match) {
              filled = true;
              break;
            }
          }
          if (filled) continue;
          ++tally.failures;
          if (r.failures.size() < 20) {
            std::string w = "Lambda^" + std::to_string(n) + "_" + std::to_string(i) + " with";
            for (int j = 0; j <= n; ++j)
              if (j != i) w += " d" + std::to_string(j) + "=" + E.simplices[n - 1][face[j]];
            w += " over " + B.simplices[n][b] + " has no filler";
            r.failures.push_back(std::move(w));
          }
        }
      }
      r.instances += tally.instances;
      if (tally.failures) r.ok = false;
      r.horns.push_back(tally);
    }
  }
  return r;
}

}  // namespace ck
