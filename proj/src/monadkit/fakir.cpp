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

#include "ck/monadkit/fakir.hpp"

#include <algorithm>

#include "ck/monadkit/algebra.hpp"

namespace ck {

FakirValue fakir(const Monad& M, const std::vector<int>& window) {
  FakirValue F;
  F.monad = M.name();
  F.window = window;
  for (int x : window) {
    const Carrier X = M.base(x), TX = M.apply(X);
    const Fn eta = M.unit_table(X);
    const Fn Teta = M.fmap_table(X, TX, eta);
    const Fn etaT = M.unit_table(TX);
    auto& sub = F.subset[x];
    for (int m = 0; m < static_cast<int>(Teta.size()); ++m)
      if (Teta[m] == etaT[m]) sub.push_back(m);
    for (int e = 0; e < x; ++e)
      if (!std::binary_search(sub.begin(), sub.end(), eta[e])) {
        F.unit_lands = false;
        F.violations.push_back("eta(" + std::to_string(e) + ") at " + std::to_string(x) +
                               " is outside the equalizer");
      }
  }
  for (int x : window)
    for (int y : window)
      for (const Fn& h : all_functions(x, y)) {
        const Fn th = M.fmap_table(M.base(x), M.base(y), h);
        for (int m : F.subset[x])
          if (!std::binary_search(F.subset[y].begin(), F.subset[y].end(), th[m])) {
            F.invariant = false;
            F.violations.push_back("T([" + join_ints(h) + "]) leaves the equalizer at " +
                                   M.show(M.apply(M.base(x)), m));
          }
      }
  return F;
}

CoaugmentedEndofunctor fakir_coaugmented(const Monad& M, const FakirValue& F,
                                         const ConcreteCategory& finset) {
  CoaugmentedEndofunctor G;
  G.name = "fakir(" + M.name() + ")";
  G.ambient = &finset;
  G.window = F.window;
  auto pos = [&](int x, int m) {
    const auto& s = F.subset.at(x);
    auto it = std::lower_bound(s.begin(), s.end(), m);
    if (it == s.end() || *it != m) throw StructureError("equalizer is not invariant");
    return static_cast<int>(it - s.begin());
  };
  for (int x : F.window) {
    G.size.push_back(static_cast<int>(F.subset.at(x).size()));
    Fn u;
    for (int e = 0; e < x; ++e) u.push_back(pos(x, M.unit(M.base(x), e)));
    G.unit.push_back(u);
  }
  for (int x : F.window)
    for (int y : F.window) {
      std::vector<Fn> maps;
      for (const Fn& h : finset.hom(x, y)) {
        Fn r;
        for (int m : F.subset.at(x)) r.push_back(pos(y, M.fmap(M.base(x), M.base(y), h, m)));
        maps.push_back(r);
      }
      G.fmap.push_back(maps);
    }
  return G;
}

FakirCodensityReport fakir_vs_codensity(const Monad& M, int c, const std::vector<int>& ladder,
                                        int cmax) {
  static const FinSetCategory finset;
  FakirCodensityReport rep;
  rep.c = c;
  std::vector<int> window;
  for (int w = 0; w <= cmax; ++w) window.push_back(w);
  const FakirValue F = fakir(M, window);
  const auto G = fakir_coaugmented(M, F, finset);
  rep.fakir_size = static_cast<int>(F.subset.at(c).size());
  const int top = ladder.empty() ? 0 : *std::max_element(ladder.begin(), ladder.end());
  for (int x = 0; x <= top; ++x)
    if (!algebra_search(M, x, 1).found.empty()) rep.A.push_back(x);
  const int ci = static_cast<int>(std::find(window.begin(), window.end(), c) - window.begin());
  for (int n : ladder) {
    FakirCodensityRung r;
    r.bound = n;
    for (int d : rep.A)
      if (d <= n) r.D.push_back(d);
    std::vector<CodensityValue> values;
    const auto T = codensity_coaugmented(finset, r.D, window, &values);
    r.codensity_size = values[ci].size();
    auto p = coaugmented_maps_problem(G, T);
    solve_families(p, [&](const std::vector<int>& sol) {
      ++r.comparisons;
      int off = 0;
      for (int i = 0; i < ci; ++i) off += G.size[i];
      std::vector<int> img(sol.begin() + off, sol.begin() + off + G.size[ci]);
      std::sort(img.begin(), img.end());
      const bool inj = std::adjacent_find(img.begin(), img.end()) == img.end();
      if (inj && G.size[ci] == r.codensity_size) r.bijective = true;
      return true;
    });
    rep.rungs.push_back(r);
  }
  for (size_t k = rep.rungs.size(); k-- > 0;) {
    if (k + 1 < rep.rungs.size() && rep.rungs[k].codensity_size != rep.rungs[k + 1].codensity_size)
      break;
    rep.stable_from = rep.rungs[k].bound;
  }
  rep.matches = !rep.rungs.empty() && rep.rungs.back().bijective;
  return rep;
}

bool IdentityMorphisms::is_unit(size_t k, const Monad& M, const std::vector<int>& window) const {
  for (size_t i = 0; i < window.size(); ++i)
    if (naturals[k][i] != M.unit_table(M.base(window[i]))) return false;
  return true;
}

IdentityMorphisms monad_morphisms_from_identity(const Monad& M, const std::vector<int>& window) {
  IdentityMorphisms out;
  FamilyProblem p;
  for (int x : window) p.add_block(x, M.checked_size(M.apply(M.base(x))));
  for (size_t i = 0; i < window.size(); ++i)
    for (size_t j = 0; j < window.size(); ++j)
      for (const Fn& h : all_functions(window[i], window[j]))
        p.arrows.push_back({static_cast<int>(i), static_cast<int>(j), h,
                            M.fmap_table(M.base(window[i]), M.base(window[j]), h)});
  solve_families(p, [&](const std::vector<int>& sol) {
    std::vector<Fn> lam;
    size_t off = 0;
    for (int x : window) {
      lam.emplace_back(sol.begin() + off, sol.begin() + off + x);
      off += x;
    }
    out.naturals.push_back(std::move(lam));
    return true;
  });
  for (size_t k = 0; k < out.naturals.size(); ++k) {
    bool ok = true;
    for (size_t i = 0; ok && i < window.size(); ++i) {
      const Carrier X = M.base(window[i]), TX = M.apply(X);
      const Fn& lam = out.naturals[k][i];
      const Fn eta = M.unit_table(X);
      ok = lam == eta;
      for (int e = 0; ok && e < window[i]; ++e)
        ok = M.mult(X, M.fmap(X, TX, lam, lam[e])) == lam[e];
    }
    if (ok) out.morphisms.push_back(k);
  }
  return out;
}

}  // namespace ck
