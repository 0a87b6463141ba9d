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

#include "ck/simplex/free_monoid.hpp"

#include <map>
#include <set>

#include "ck/simplex/ndelta.hpp"
#include "ck/simplex/sset.hpp"

namespace ck {
namespace {

// Degeneracy preimages and Eilenberg-Zilber data for every generator.
struct EZTable {
  std::vector<std::vector<GeneratorEZ>> ez;
  std::vector<std::vector<bool>> nondegenerate;

  explicit EZTable(const FreeMonoidPresentation& P) {
    ez.resize(P.N + 1);
    nondegenerate.resize(P.N + 1);
    for (int n = 0; n <= P.N; ++n) {
      std::vector<std::pair<int, int>> from(P.size(n), {-1, -1});  // (i, z) with s_i z = x
      if (n >= 1)
        for (int i = n - 1; i >= 0; --i)
          for (int z = 0; z < P.size(n - 1); ++z) from[P.degen[n - 1][i][z]] = {i, z};
      for (int x = 0; x < P.size(n); ++x) {
        auto [i, z] = from[x];
        nondegenerate[n].push_back(i < 0);
        if (i < 0) {
          ez[n].push_back({ord_identity(n + 1), n, x});
        } else {
          GeneratorEZ e = ez[n - 1][z];
          e.epi = ord_compose(e.epi, codegeneracy(n - 1, i));
          ez[n].push_back(e);
        }
      }
    }
  }
};

// Cells of Delta^k at level n outside the boundary (horn = -1) or outside
// the horn Lambda^k_horn, counted on the combinatorial subcomplexes.
uint64_t open_cells(int k, int n, int horn_index) {
  static std::map<std::tuple<int, int, int>, uint64_t> memo;
  auto key = std::make_tuple(k, n, horn_index);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  const TruncatedSSet full = standard_simplex(k, n);
  const TruncatedSSet sub = horn_index < 0 ? boundary_simplex(k, n) : horn(k, horn_index, n);
  const uint64_t c = static_cast<uint64_t>(full.size(n) - sub.size(n));
  memo[key] = c;
  return c;
}

uint64_t words_up_to(uint64_t g, int L) {
  uint64_t total = 0, p = 1;
  for (int j = 0; j <= L; ++j) {
    if (total > UINT64_MAX - p) return UINT64_MAX;
    total += p;
    if (g && p > UINT64_MAX / g) return UINT64_MAX;
    p *= g;
  }
  return total;
}

}  // namespace

Word word_face(const FreeMonoidPresentation& P, int n, int i, const Word& w) {
  Word out;
  for (int x : w) {
    const Word& f = P.face[n][i][x];
    out.insert(out.end(), f.begin(), f.end());
  }
  return out;
}

Word word_degeneracy(const FreeMonoidPresentation& P, int n, int i, const Word& w) {
  Word out;
  for (int x : w) out.push_back(P.degen[n][i][x]);
  return out;
}

ValidationReport validate_presentation(const FreeMonoidPresentation& P) {
  ValidationReport r;
  const size_t levels = P.N + 1;
  if (P.X.size() != levels || P.face.size() != levels || P.degen.size() != levels) {
    r.fail(P.name + ": level tables do not match the dimension bound");
    return r;
  }
  for (int n = 0; n <= P.N; ++n) {
    if (P.face[n].size() != static_cast<size_t>(n >= 1 ? n + 1 : 0) ||
        P.degen[n].size() != static_cast<size_t>(n < P.N ? n + 1 : 0)) {
      r.fail(P.name + ": wrong number of operators at level " + std::to_string(n));
      return r;
    }
    for (const auto& f : P.face[n]) {
      if (static_cast<int>(f.size()) != P.size(n)) {
        r.fail(P.name + ": face table has the wrong size at level " + std::to_string(n));
        return r;
      }
      for (const Word& w : f)
        for (int y : w)
          if (y < 0 || y >= P.size(n - 1)) {
            r.fail(P.name + ": face word out of range at level " + std::to_string(n));
            return r;
          }
    }
    for (const Fn& s : P.degen[n]) {
      if (static_cast<int>(s.size()) != P.size(n)) {
        r.fail(P.name + ": degeneracy table has the wrong size at level " + std::to_string(n));
        return r;
      }
      for (int y : s)
        if (y < 0 || y >= P.size(n + 1)) {
          r.fail(P.name + ": degeneracy out of range at level " + std::to_string(n));
          return r;
        }
    }
  }
  for (int n = 0; n <= P.N; ++n)
    for (int x = 0; x < P.size(n); ++x) {
      const Word w{x};
      const std::string at = " at generator " + P.X[n][x];
      for (int j = 0; n >= 2 && j <= n; ++j)
        for (int i = 0; i < j; ++i)
          if (word_face(P, n - 1, i, word_face(P, n, j, w)) != word_face(P, n - 1, j - 1, word_face(P, n, i, w)))
            r.fail("d_i d_j = d_(j-1) d_i fails" + at);
      for (int j = 0; n + 2 <= P.N && j <= n; ++j)
        for (int i = 0; i <= j; ++i)
          if (P.degen[n + 1][i][P.degen[n][j][x]] != P.degen[n + 1][j + 1][P.degen[n][i][x]])
            r.fail("s_i s_j = s_(j+1) s_i fails" + at);
      for (int j = 0; n < P.N && j <= n; ++j)
        for (int i = 0; i <= n + 1; ++i) {
          const Word lhs = P.face[n + 1][i][P.degen[n][j][x]];
          Word rhs;
          if (i < j)
            rhs = word_degeneracy(P, n - 1, j - 1, P.face[n][i][x]);
          else if (i == j || i == j + 1)
            rhs = w;
          else
            rhs = word_degeneracy(P, n - 1, j, P.face[n][i - 1][x]);
          if (lhs != rhs) r.fail("d_i s_j fails" + at);
        }
    }
  for (const auto& h : P.horns) {
    if (h.n < 1 || h.n > P.N || h.x < 0 || h.x >= P.size(h.n) || h.i < 0 || h.i > h.n) {
      r.fail(P.name + ": horn generator out of range");
      continue;
    }
    if (generator_degenerate(P, h.n, h.x)) r.fail("horn generator " + P.X[h.n][h.x] + " is degenerate");
  }
  return r;
}

bool generator_degenerate(const FreeMonoidPresentation& P, int n, int x) {
  for (int i = 0; n >= 1 && i < n; ++i)
    for (int z = 0; z < P.size(n - 1); ++z)
      if (P.degen[n - 1][i][z] == x) return true;
  return false;
}

GeneratorEZ generator_ez(const FreeMonoidPresentation& P, int n, int x) {
  for (int i = 0; n >= 1 && i < n; ++i)
    for (int z = 0; z < P.size(n - 1); ++z)
      if (P.degen[n - 1][i][z] == x) {
        GeneratorEZ e = generator_ez(P, n - 1, z);
        e.epi = ord_compose(e.epi, codegeneracy(n - 1, i));
        return e;
      }
  return {ord_identity(n + 1), n, x};
}

int apply_epi(const FreeMonoidPresentation& P, const OrdMap& sigma, int y) {
  for (int j = 0; j + 1 < sigma.dom; ++j)
    if (sigma.v[j] == sigma.v[j + 1]) {
      OrdMap rest = sigma;
      --rest.dom;
      rest.v.erase(rest.v.begin() + j + 1);
      return P.degen[sigma.dom - 2][j][apply_epi(P, rest, y)];
    }
  return y;
}

std::string FiltrationReport::stamp() const {
  return "window: level <= " + std::to_string(N) + ", word length <= " + std::to_string(L);
}

namespace {

FiltrationReport run_filtration(const FreeMonoidPresentation& P, int up_to, int L, bool anodyne) {
  FiltrationReport r;
  r.anodyne = anodyne;
  r.N = P.N;
  r.L = L;
  auto fail = [&](std::string m) {
    r.ok = false;
    if (r.violations.size() < 50) r.violations.push_back(std::move(m));
  };
  ValidationReport v = validate_presentation(P);
  for (const auto& m : v.violations) fail(m);
  if (!v.ok) return r;
  // the horn stages need one more step: roots d_i(h) h of top level come last
  const int last_stage = anodyne ? P.N + 1 : P.N;
  up_to = std::min(up_to, last_stage);
  const EZTable T(P);

  // horn data: index per generator, -1 when not a horn generator
  std::vector<std::vector<int>> hidx(P.N + 1);
  for (int n = 0; n <= P.N; ++n) hidx[n].assign(P.size(n), -1);
  for (const auto& h : P.horns) hidx[h.n][h.x] = h.i;
  if (anodyne) {
    if (P.horns.empty()) fail(P.name + ": no horn generators given");
    // H_(n+1) u H_n = X_n nondegenerate through h -> d_i(h) h
    for (int n = 0; n < P.N; ++n) {
      std::vector<int> cover(P.size(n), 0);
      for (int x = 0; x < P.size(n); ++x)
        if (hidx[n][x] >= 0) ++cover[x];
      for (int h = 0; h < P.size(n + 1); ++h) {
        if (hidx[n + 1][h] < 0) continue;
        const Word& f = P.face[n + 1][hidx[n + 1][h]][h];
        if (f.size() != 1 || !T.nondegenerate[n][f[0]]) {
          fail("the designated face of " + P.X[n + 1][h] + " is not a non-degenerate generator");
          continue;
        }
        ++cover[f[0]];
      }
      for (int x = 0; x < P.size(n); ++x)
        if (T.nondegenerate[n][x] && cover[x] != 1)
          fail("level " + std::to_string(n) + ": " + P.X[n][x] + " is covered " + std::to_string(cover[x]) +
               " times by horn generators and their faces");
    }
  }

  // member(k, n, x): x in X_n^(k), or in the horn stage when anodyne
  auto member = [&](int k, int n, int x) {
    const GeneratorEZ& e = T.ez[n][x];
    if (!anodyne) return e.level <= k;
    return e.level <= k - 1 || (e.level == k && hidx[k][e.root] >= 0);
  };

  std::vector<uint64_t> prev(P.N + 1, 0);
  for (int k = -1; k <= up_to; ++k) {
    for (int n = 0; n <= P.N; ++n) {
      FiltrationRow row;
      row.stage = k;
      row.level = n;
      std::set<int> fresh;
      for (int x = 0; x < P.size(n); ++x)
        if (member(k, n, x)) {
          ++row.generators;
          if (k < 0 || !member(k - 1, n, x)) fresh.insert(x);
        }
      row.attached = row.generators - prev[n];
      prev[n] = row.generators;
      row.elements = words_up_to(row.generators, L);
      if (k >= 0) {
        // cells: sigma^*(y) over surjections onto [k] (and tau^*(d_i h) for horns)
        std::multiset<int> cells;
        if (!anodyne) {
          for (int y = 0; y < P.size(k); ++y) {
            if (!T.nondegenerate[k][y]) continue;
            row.expected += open_cells(k, n, -1);
            if (k <= n)
              for (const OrdMap& s : monotone_surjections(n + 1, k + 1)) cells.insert(apply_epi(P, s, y));
          }
        } else {
          // sigma^*(h) for h in H_k and tau^*(x) for x in X_(k-1) nondegenerate minus H_(k-1)
          for (int y = 0; k <= P.N && y < P.size(k); ++y) {
            if (hidx[k][y] < 0) continue;
            row.expected += open_cells(k, n, hidx[k][y]);
            if (k <= n)
              for (const OrdMap& s : monotone_surjections(n + 1, k + 1)) cells.insert(apply_epi(P, s, y));
          }
          for (int y = 0; k >= 1 && y < P.size(k - 1); ++y) {
            if (!T.nondegenerate[k - 1][y] || hidx[k - 1][y] >= 0) continue;
            if (k > P.N) row.expected += open_cells(k - 1, n, -1);
            if (k - 1 <= n)
              for (const OrdMap& s : monotone_surjections(n + 1, k)) cells.insert(apply_epi(P, s, y));
          }
        }
        if (cells.size() != row.expected)
          fail("stage " + std::to_string(k) + " level " + std::to_string(n) + ": cell count mismatch");
        if (std::set<int>(cells.begin(), cells.end()).size() != cells.size())
          fail("stage " + std::to_string(k) + " level " + std::to_string(n) + ": two cells give one generator");
        if (std::set<int>(cells.begin(), cells.end()) != fresh)
          fail("stage " + std::to_string(k) + " level " + std::to_string(n) +
               ": new generators are not the attached cells");
        if (row.attached != row.expected)
          fail("stage " + std::to_string(k) + " level " + std::to_string(n) + ": attached " +
               std::to_string(row.attached) + ", cells " + std::to_string(row.expected));
      }
      // simplicial submonoid
      for (int x = 0; x < P.size(n); ++x) {
        if (!member(k, n, x)) continue;
        for (int i = 0; n >= 1 && i <= n; ++i)
          for (int y : P.face[n][i][x])
            if (!member(k, n - 1, y))
              fail("stage " + std::to_string(k) + ": d_" + std::to_string(i) + " of " + P.X[n][x] +
                   " leaves the stage");
        for (int i = 0; n < P.N && i <= n; ++i)
          if (!member(k, n + 1, P.degen[n][i][x]))
            fail("stage " + std::to_string(k) + ": s_" + std::to_string(i) + " of " + P.X[n][x] +
                 " leaves the stage");
      }
      r.rows.push_back(row);
    }
    if (anodyne && k >= 1 && k <= P.N)
      for (int h = 0; h < P.size(k); ++h) {
        if (hidx[k][h] < 0) continue;
        for (int j = 0; j <= k; ++j) {
          if (j == hidx[k][h]) continue;
          for (int y : P.face[k][j][h])
            if (!member(k - 1, k - 1, y))
              fail("horn of " + P.X[k][h] + ": d_" + std::to_string(j) + " is not in the previous stage");
        }
      }
  }
  for (int n = 0; n <= P.N; ++n)
    if (up_to == last_stage && prev[n] != static_cast<uint64_t>(P.size(n)))
      fail("the filtration does not exhaust level " + std::to_string(n));
  r.stable_from = -1;
  for (const auto& row : r.rows)
    if (row.attached > 0) r.stable_from = std::max(r.stable_from, row.stage);
  return r;
}

}  // namespace

FiltrationReport free_map_filtration(const FreeMonoidPresentation& P, int up_to, int L) {
  return run_filtration(P, up_to, L, false);
}

FiltrationReport anodyne_filtration(const FreeMonoidPresentation& P, int up_to, int L) {
  return run_filtration(P, up_to, L, true);
}

FreeMonoidPresentation ndelta_presentation(int N, int B, bool injective) {
  FreeMonoidPresentation P;
  P.name = injective ? "N(Delta_+^inj)" : "N(Delta_+)";
  P.N = N;
  P.X.resize(N + 1);
  P.face.resize(N + 1);
  P.degen.resize(N + 1);
  std::vector<std::vector<Chain>> gens(N + 1);
  std::vector<std::map<std::string, int>> index(N + 1);
  for (int n = 0; n <= N; ++n)
    for (const Chain& c : enumerate_ndelta_plus(n, B, injective))
      if (c.last() == 1) {
        index[n][c.str()] = static_cast<int>(gens[n].size());
        gens[n].push_back(c);
        P.X[n].push_back(c.str());
        if (n >= 1 && c.cards[0] == 0 && !c.degenerate()) P.horns.push_back({n, P.size(n) - 1, 0});
      }
  for (int n = 0; n <= N; ++n) {
    for (int i = 0; n >= 1 && i <= n; ++i) {
      std::vector<Word> f;
      for (const Chain& c : gens[n]) {
        Word w;
        for (const Chain& part : join_decompose_chain(chain_face(c, i))) w.push_back(index[n - 1].at(part.str()));
        f.push_back(std::move(w));
      }
      P.face[n].push_back(std::move(f));
    }
    for (int i = 0; n < N && i <= n; ++i) {
      Fn s;
      for (const Chain& c : gens[n]) s.push_back(index[n + 1].at(chain_degeneracy(c, i).str()));
      P.degen[n].push_back(std::move(s));
    }
  }
  return P;
}

nlohmann::json presentation_to_json(const FreeMonoidPresentation& P) {
  nlohmann::json j;
  j["name"] = P.name;
  j["N"] = P.N;
  j["generators"] = P.X;
  j["faces"] = P.face;
  j["degeneracies"] = P.degen;
  nlohmann::json hs = nlohmann::json::array();
  for (const auto& h : P.horns) hs.push_back({{"level", h.n}, {"generator", P.X[h.n][h.x]}, {"index", h.i}});
  j["horns"] = hs;
  return j;
}

FreeMonoidPresentation presentation_from_json(const nlohmann::json& j) {
  FreeMonoidPresentation P;
  try {
    P.name = j.value("name", std::string("A"));
    P.N = j.at("N").get<int>();
    P.X = j.at("generators").get<std::vector<std::vector<std::string>>>();
    P.face = j.at("faces").get<std::vector<std::vector<std::vector<Word>>>>();
    P.degen = j.at("degeneracies").get<std::vector<std::vector<Fn>>>();
    if (j.contains("horns"))
      for (const auto& h : j.at("horns")) {
        const int n = h.at("level").get<int>();
        if (n < 0 || n >= static_cast<int>(P.X.size())) throw StructureError("horn level out of range");
        const std::string g = h.at("generator").get<std::string>();
        int x = -1;
        for (size_t t = 0; t < P.X[n].size(); ++t)
          if (P.X[n][t] == g) x = static_cast<int>(t);
        if (x < 0) throw StructureError("horn generator " + g + " is not a generator");
        P.horns.push_back({n, x, h.at("index").get<int>()});
      }
  } catch (const nlohmann::json::exception& e) {
    throw StructureError(std::string("presentation file: ") + e.what());
  }
  ValidationReport v = validate_presentation(P);
  if (!v.ok) throw StructureError("presentation file: " + v.violations.front());
  return P;
}

}  // namespace ck
