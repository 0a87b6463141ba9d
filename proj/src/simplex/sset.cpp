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

#include "ck/simplex/sset.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "ck/common.hpp"

namespace ck {
namespace {

// Builds a truncated simplicial set from keyed simplices; faces and
// degeneracies are computed on keys and looked up afterwards.
template <class Key, class Levels, class Face, class Degen, class Name>
TruncatedSSet build_sset(std::string name, int N, Levels levels, Face face, Degen degen, Name show) {
  TruncatedSSet X;
  X.name = std::move(name);
  X.N = N;
  std::vector<std::vector<Key>> keys(N + 1);
  std::vector<std::map<Key, int>> index(N + 1);
  uint64_t total = 0;
  for (int n = 0; n <= N; ++n) {
    keys[n] = levels(n);
    total += keys[n].size();
    if (total > guard_limit()) throw ResourceError(X.name + ": too many simplices");
    for (size_t x = 0; x < keys[n].size(); ++x) index[n][keys[n][x]] = static_cast<int>(x);
    X.simplices.emplace_back();
    for (const Key& k : keys[n]) X.simplices[n].push_back(show(n, k));
  }
  auto look = [&](int n, const Key& k) {
    auto it = index[n].find(k);
    if (it == index[n].end()) throw std::logic_error(X.name + ": face or degeneracy leaves the complex");
    return it->second;
  };
  X.face.resize(N + 1);
  X.degen.resize(N + 1);
  for (int n = 0; n <= N; ++n) {
    if (n >= 1)
      for (int i = 0; i <= n; ++i) {
        Fn f;
        for (const Key& k : keys[n]) f.push_back(look(n - 1, face(n, i, k)));
        X.face[n].push_back(std::move(f));
      }
    if (n < N)
      for (int i = 0; i <= n; ++i) {
        Fn s;
        for (const Key& k : keys[n]) s.push_back(look(n + 1, degen(n, i, k)));
        X.degen[n].push_back(std::move(s));
      }
  }
  return X;
}

TruncatedSSet simplex_subcomplex(std::string name, int n, int N,
                                 const std::function<bool(const std::vector<bool>&)>& keep) {
  using Key = std::vector<int>;
  return build_sset<Key>(
      std::move(name), N,
      [&](int k) {
        std::vector<Key> out;
        for (const OrdMap& m : monotone_maps(k + 1, n + 1)) {
          std::vector<bool> hit(n + 1, false);
          for (int v : m.v) hit[v] = true;
          if (keep(hit)) out.push_back(m.v);
        }
        return out;
      },
      [](int, int i, const Key& k) {
        Key r = k;
        r.erase(r.begin() + i);
        return r;
      },
      [](int, int i, const Key& k) {
        Key r = k;
        r.insert(r.begin() + i, k[i]);
        return r;
      },
      [](int, const Key& k) { return join_ints(k, ""); });
}

}  // namespace

int TruncatedSSet::find(int n, const std::string& id) const {
  auto it = std::find(simplices[n].begin(), simplices[n].end(), id);
  return it == simplices[n].end() ? -1 : static_cast<int>(it - simplices[n].begin());
}

bool TruncatedSSet::degenerate(int n, int x) const {
  for (int i = 0; i < n; ++i)
    if (s(n - 1, i, d(n, i, x)) == x) return true;
  return false;
}

ValidationReport check_simplicial_identities(const TruncatedSSet& X) {
  ValidationReport r;
  if (static_cast<int>(X.simplices.size()) != X.N + 1 || static_cast<int>(X.face.size()) != X.N + 1 ||
      static_cast<int>(X.degen.size()) != X.N + 1) {
    r.fail(X.name + ": level tables do not match the dimension bound");
    return r;
  }
  for (int n = 0; n <= X.N; ++n) {
    const size_t faces = n >= 1 ? n + 1 : 0, degens = n < X.N ? n + 1 : 0;
    if (X.face[n].size() != faces || X.degen[n].size() != degens) {
      r.fail(X.name + ": wrong number of operators at level " + std::to_string(n));
      return r;
    }
    for (const Fn& f : X.face[n])
      for (int y : f)
        if (f.size() != X.simplices[n].size() || y < 0 || y >= X.size(n - 1)) {
          r.fail(X.name + ": face table out of range at level " + std::to_string(n));
          return r;
        }
    for (const Fn& f : X.degen[n])
      for (int y : f)
        if (f.size() != X.simplices[n].size() || y < 0 || y >= X.size(n + 1)) {
          r.fail(X.name + ": degeneracy table out of range at level " + std::to_string(n));
          return r;
        }
  }
  auto where = [&](const char* rule, int n, int i, int j, int x) {
    return std::string(rule) + " fails at level " + std::to_string(n) + ", i=" + std::to_string(i) +
           ", j=" + std::to_string(j) + ", x=" + X.simplices[n][x];
  };
  for (int n = 2; n <= X.N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        for (int x = 0; x < X.size(n); ++x)
          if (X.d(n - 1, i, X.d(n, j, x)) != X.d(n - 1, j - 1, X.d(n, i, x)))
            r.fail(where("d_i d_j = d_(j-1) d_i", n, i, j, x));
  for (int n = 0; n + 2 <= X.N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        for (int x = 0; x < X.size(n); ++x)
          if (X.s(n + 1, i, X.s(n, j, x)) != X.s(n + 1, j + 1, X.s(n, i, x)))
            r.fail(where("s_i s_j = s_(j+1) s_i", n, i, j, x));
  for (int n = 0; n < X.N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i)
        for (int x = 0; x < X.size(n); ++x) {
          const int lhs = X.d(n + 1, i, X.s(n, j, x));
          int rhs;
          if (i < j)
            rhs = X.s(n - 1, j - 1, X.d(n, i, x));
          else if (i == j || i == j + 1)
            rhs = x;
          else
            rhs = X.s(n - 1, j, X.d(n, i - 1, x));
          if (lhs != rhs) r.fail(where("d_i s_j", n, i, j, x));
        }
  return r;
}

int apply_operator(const TruncatedSSet& X, const OrdMap& theta, int x) {
  if (!theta.valid() || theta.dom < 1) throw std::logic_error("apply_operator: not a map in Delta");
  if (theta.dom - 1 > X.N || theta.cod - 1 > X.N)
    throw std::logic_error("apply_operator: operator leaves the truncation");
  std::vector<bool> hit(theta.cod, false);
  for (int v : theta.v) hit[v] = true;
  for (int i = theta.cod - 1; i >= 0; --i)
    if (!hit[i]) {
      OrdMap rest{theta.dom, theta.cod - 1, {}};
      for (int v : theta.v) rest.v.push_back(v > i ? v - 1 : v);
      return apply_operator(X, rest, X.d(theta.cod - 1, i, x));
    }
  for (int j = 0; j + 1 < theta.dom; ++j)
    if (theta.v[j] == theta.v[j + 1]) {
      OrdMap rest = theta;
      --rest.dom;
      rest.v.erase(rest.v.begin() + j + 1);
      return X.s(theta.dom - 2, j, apply_operator(X, rest, x));
    }
  return x;
}

EZ ez_decompose(const TruncatedSSet& X, int n, int x) {
  for (int i = 0; i < n; ++i) {
    const int z = X.d(n, i, x);
    if (X.s(n - 1, i, z) != x) continue;
    EZ e = ez_decompose(X, n - 1, z);
    e.epi = ord_compose(e.epi, codegeneracy(n - 1, i));
    return e;
  }
  return {ord_identity(n + 1), n, x};
}

int ez_presentations(const TruncatedSSet& X, int n, int x) {
  int count = 0;
  for (int m = 0; m <= n; ++m)
    for (const OrdMap& sigma : monotone_surjections(n + 1, m + 1))
      for (int y = 0; y < X.size(m); ++y)
        if (!X.degenerate(m, y) && apply_operator(X, sigma, y) == x) ++count;
  return count;
}

TruncatedSSet nerve(const FinCategory& C, int N) {
  using Key = std::vector<Id>;
  auto vertex = [&](const Key& k, int n, int i) {
    if (n == 0) return k[0];
    return i < n ? C.src(k[i]) : C.tgt(k[n - 1]);
  };
  return build_sset<Key>(
      "N(C)", N,
      [&](int n) {
        std::vector<Key> out;
        if (n == 0) {
          for (Id o = 0; o < C.num_objects(); ++o) out.push_back({o});
          return out;
        }
        Key cur;
        std::function<void()> grow = [&]() {
          if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            if (out.size() > guard_limit()) throw ResourceError("nerve: too many chains");
            return;
          }
          for (Id f = 0; f < C.num_morphisms(); ++f)
            if (cur.empty() || C.src(f) == C.tgt(cur.back())) {
              cur.push_back(f);
              grow();
              cur.pop_back();
            }
        };
        grow();
        return out;
      },
      [&](int n, int i, const Key& k) -> Key {
        if (n == 1) return {i == 0 ? C.tgt(k[0]) : C.src(k[0])};
        Key r = k;
        if (i == 0) {
          r.erase(r.begin());
        } else if (i == n) {
          r.pop_back();
        } else {
          r[i - 1] = C.compose(k[i], k[i - 1]);
          r.erase(r.begin() + i);
        }
        return r;
      },
      [&](int n, int i, const Key& k) -> Key {
        if (n == 0) return {C.identity(k[0])};
        Key r = k;
        r.insert(r.begin() + i, C.identity(vertex(k, n, i)));
        return r;
      },
      [&](int n, const Key& k) {
        if (n == 0) return C.object_name(k[0]);
        std::string s;
        for (size_t i = 0; i < k.size(); ++i) s += (i ? ";" : "") + C.morphism(k[i]).name;
        return s;
      });
}

TruncatedSSet standard_simplex(int n, int N) {
  return simplex_subcomplex("Delta^" + std::to_string(n), n, N, [](const std::vector<bool>&) { return true; });
}

TruncatedSSet boundary_simplex(int n, int N) {
  return simplex_subcomplex("dDelta^" + std::to_string(n), n, N, [](const std::vector<bool>& hit) {
    return std::find(hit.begin(), hit.end(), false) != hit.end();
  });
}

TruncatedSSet horn(int n, int i, int N) {
  if (i < 0 || i > n) throw StructureError("horn index out of range");
  return simplex_subcomplex("Lambda^" + std::to_string(n) + "_" + std::to_string(i), n, N,
                            [i](const std::vector<bool>& hit) {
                              for (size_t v = 0; v < hit.size(); ++v)
                                if (static_cast<int>(v) != i && !hit[v]) return true;
                              return false;
                            });
}

TruncatedSSet point_sset(int N) {
  TruncatedSSet X = standard_simplex(0, N);
  X.name = "point";
  return X;
}

ValidationReport check_simplicial_map(const SimplicialMap& f) {
  ValidationReport r;
  const TruncatedSSet &A = *f.dom, &B = *f.cod;
  if (B.N < A.N || static_cast<int>(f.level.size()) != A.N + 1) {
    r.fail("map levels do not match the domain");
    return r;
  }
  for (int n = 0; n <= A.N; ++n) {
    if (static_cast<int>(f.level[n].size()) != A.size(n)) {
      r.fail("map table has the wrong size at level " + std::to_string(n));
      return r;
    }
    for (int y : f.level[n])
      if (y < 0 || y >= B.size(n)) {
        r.fail("map value out of range at level " + std::to_string(n));
        return r;
      }
  }
  for (int n = 0; n <= A.N; ++n)
    for (int x = 0; x < A.size(n); ++x) {
      for (int i = 0; n >= 1 && i <= n; ++i)
        if (f.level[n - 1][A.d(n, i, x)] != B.d(n, i, f.level[n][x]))
          r.fail("map does not commute with d_" + std::to_string(i) + " at " + A.simplices[n][x]);
      for (int i = 0; n < A.N && i <= n; ++i)
        if (f.level[n + 1][A.s(n, i, x)] != B.s(n, i, f.level[n][x]))
          r.fail("map does not commute with s_" + std::to_string(i) + " at " + A.simplices[n][x]);
    }
  return r;
}

SimplicialMap to_point(const TruncatedSSet& X, const TruncatedSSet& pt) {
  SimplicialMap f{&X, &pt, {}};
  for (int n = 0; n <= X.N; ++n) f.level.push_back(Fn(X.size(n), 0));
  return f;
}

SimplicialMap identity_map(const TruncatedSSet& X) {
  SimplicialMap f{&X, &X, {}};
  for (int n = 0; n <= X.N; ++n) {
    Fn id(X.size(n));
    for (int x = 0; x < X.size(n); ++x) id[x] = x;
    f.level.push_back(std::move(id));
  }
  return f;
}

SimplicialMap inclusion_map(const TruncatedSSet& sub, const TruncatedSSet& X) {
  SimplicialMap f{&sub, &X, {}};
  for (int n = 0; n <= sub.N; ++n) {
    Fn m;
    for (const std::string& id : sub.simplices[n]) {
      const int y = n <= X.N ? X.find(n, id) : -1;
      if (y < 0) throw StructureError(sub.name + " is not a subcomplex of " + X.name + ": " + id);
      m.push_back(y);
    }
    f.level.push_back(std::move(m));
  }
  return f;
}

nlohmann::json sset_to_json(const TruncatedSSet& X) {
  nlohmann::json j;
  j["name"] = X.name;
  j["N"] = X.N;
  j["levels"] = X.simplices;
  j["faces"] = X.face;
  j["degeneracies"] = X.degen;
  return j;
}

TruncatedSSet sset_from_json(const nlohmann::json& j) {
  TruncatedSSet X;
  try {
    X.name = j.value("name", std::string("X"));
    X.N = j.at("N").get<int>();
    X.simplices = j.at("levels").get<std::vector<std::vector<std::string>>>();
    X.face = j.at("faces").get<std::vector<std::vector<Fn>>>();
    X.degen = j.at("degeneracies").get<std::vector<std::vector<Fn>>>();
  } catch (const nlohmann::json::exception& e) {
    throw StructureError(std::string("simplicial set file: ") + e.what());
  }
  if (X.N < 0) throw StructureError("simplicial set file: negative dimension bound");
  ValidationReport r = check_simplicial_identities(X);
  if (!r.ok) throw StructureError("simplicial set file: " + r.violations.front());
  return X;
}

}  // namespace ck
