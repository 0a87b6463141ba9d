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

#include "ck/cli/suite.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ck/bkshadow/builtin.hpp"
#include "ck/bkshadow/ring.hpp"
#include "ck/fincat/category.hpp"
#include "ck/fincat/concrete.hpp"
#include "ck/fincat/ordinal.hpp"
#include "ck/kan/codensity.hpp"
#include "ck/kan/cofinality.hpp"
#include "ck/kan/localization.hpp"
#include "ck/monadkit/algebra.hpp"
#include "ck/monadkit/fakir.hpp"
#include "ck/monadkit/laws.hpp"
#include "ck/monadkit/walking.hpp"
#include "ck/simplex/lifting.hpp"
#include "ck/simplex/ndelta.hpp"
#include "ck/simplex/sset.hpp"

namespace ck {

namespace {

// Pinned thresholds.
constexpr double kLawSeconds = 10.0;
constexpr double kConvergenceSeconds = 60.0;
constexpr int kLawMax = 4;
constexpr int kFakirMax = 4;
constexpr int kCodensityMax = 3;
constexpr int kLadderTop = 4;
constexpr int kIsarPowerset = 5;
constexpr int kIsarAffine = 4;
constexpr int kMorphismMax = 3;
constexpr int kTerminalMax = 3;
constexpr int kBasisK = 3;
constexpr int kBasisB = 4;
constexpr int kHornLevels = 2;
constexpr int kInjN = 4;
constexpr int kWalkingCarrier = 3;
constexpr int kWalkingCard = 4;
constexpr int kCanonicalMax = 6;
constexpr int kLiftDim = 3;

std::vector<int> upto(int lo, int hi) {
  std::vector<int> w;
  for (int i = lo; i <= hi; ++i) w.push_back(i);
  return w;
}

std::string set_str(const std::vector<int>& v) { return "{" + join_ints(v, ",") + "}"; }

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Builder {
  CriterionResult r;
  void check(bool ok, const std::string& what) {
    if (!ok) {
      r.pass = false;
      if (r.counterexamples.size() < 20) r.counterexamples.push_back(what);
    }
  }
  void note(const std::string& s) { r.details.push_back(s); }
};

std::vector<int> algebra_sizes(const Monad& M, const std::vector<int>& window) {
  std::vector<int> A;
  for (int x : window)
    if (!algebra_search(M, x, 1).found.empty()) A.push_back(x);
  return A;
}

void c1(Builder& b) {
  for (const char* name : {"identity", "powerset", "maybe", "writer:Z/2", "affine:Z/2"}) {
    auto t0 = std::chrono::steady_clock::now();
    auto M = builtin_monad(name);
    auto rep = monad_law_check(*M, upto(0, kLawMax));
    double s = since(t0);
    b.r.seconds += s;
    b.note(std::string(name) + ": " + std::to_string(rep.checks) + " checks, " +
           (rep.ok ? "laws hold" : "laws fail"));
    for (const auto& n : rep.notes) b.note(std::string(name) + ": " + n);
    for (const auto& v : rep.violations) b.check(false, std::string(name) + ": " + v);
    b.check(s < kLawSeconds, std::string(name) + ": over the time budget");
  }
}

void c2(Builder& b) {
  auto P = powerset_monad();
  auto F = fakir(*P, upto(0, kFakirMax));
  b.check(F.violations.empty(), "fakir reported violations");
  for (int n = 0; n <= kFakirMax; ++n) {
    Fn eta = P->unit_table(P->base(n));
    std::vector<int> want(eta.begin(), eta.end());
    std::sort(want.begin(), want.end());
    b.note("|X| = " + std::to_string(n) + ": subset " + set_str(F.subset[n]));
    b.check(F.subset[n] == want, "|X| = " + std::to_string(n) + ": subset differs from the unit image");
  }
}

void c3(Builder& b) {
  FinSetCategory S;
  int tested = 0;
  for (int mask = 1; mask < (1 << (kCodensityMax + 1)); ++mask) {
    std::vector<int> D;
    for (int d = 0; d <= kCodensityMax; ++d)
      if (mask >> d & 1) D.push_back(d);
    for (int d : D) {
      auto v = codensity_value(S, D, d);
      ++tested;
      b.check(v.unit_bijective(), "D = " + set_str(D) + ", d = " + std::to_string(d) +
                                      ": unit not bijective (|T_D(d)| = " +
                                      std::to_string(v.size()) + ")");
    }
  }
  b.note(std::to_string(tested) + " pairs (D, d) with D a nonempty subset of {0..3}");
}

void c4(Builder& b) {
  FinSetCategory S;
  auto a = codensity_value(S, {2}, 3);
  auto c = codensity_value(S, {1, 2, 4}, 3);
  b.note("|T_{2}(3)| = " + std::to_string(a.size()));
  b.note("|T_{1,2,4}(3)| = " + std::to_string(c.size()) +
         (c.unit_bijective() ? ", unit bijective" : ", unit not bijective"));
  b.check(a.size() == 8, "|T_{2}(3)| != 8");
  b.check(families_natural(S, a), "T_{2}(3): stored family not natural");
  b.check(c.size() == 3, "|T_{1,2,4}(3)| != 3");
  b.check(c.unit_bijective(), "T_{1,2,4}(3): unit not bijective");
  b.check(families_natural(S, c), "T_{1,2,4}(3): stored family not natural");
}

void c5(Builder& b) {
  FinVectCategory V(2);
  for (int n = 0; n <= 3; ++n) {
    auto v = codensity_value(V, {1, 2}, n);
    b.note("dim " + std::to_string(n) + ": |T_D(V)| = " + std::to_string(v.size()));
    b.check(v.size() == (1 << n), "dim " + std::to_string(n) + ": size is not 2^dim");
    b.check(v.unit_bijective(), "dim " + std::to_string(n) + ": unit not bijective");
    b.check(families_natural(V, v), "dim " + std::to_string(n) + ": family not natural");
  }
}

void c6(Builder& b) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<int> ladder = upto(1, kLadderTop);
  for (const char* name : {"powerset", "affine:Z/2"}) {
    auto M = builtin_monad(name);
    for (int c = 0; c <= kCodensityMax; ++c) {
      auto r = fakir_vs_codensity(*M, c, ladder, kCodensityMax);
      std::ostringstream os;
      os << name << ", c = " << c << ": |fakir| = " << r.fakir_size << ", |T_D(c)| by bound =";
      for (const auto& g : r.rungs) os << " " << g.codensity_size;
      os << ", stable from " << r.stable_from;
      b.note(os.str());
      std::string tag = std::string(name) + ", c = " + std::to_string(c);
      b.check(r.stable_from >= 0 && r.stable_from <= kLadderTop, tag + ": not stable by 4");
      b.check(r.matches, tag + ": stable value does not match the fakir value");
    }
  }
  b.r.seconds = since(t0);
  b.check(b.r.seconds < kConvergenceSeconds, "over the time budget");
}

void isar_into(Builder& b, const char* name, int top) {
  auto M = builtin_monad(name);
  auto r = isar_chain_check(*M, upto(0, top), 2);
  b.note(std::string(name) + ": I = " + set_str(r.I) + ", A = " + set_str(r.A) + ", S2 = " +
         set_str(r.S) + ", R = " + set_str(r.R));
  for (const auto& v : r.violations) b.check(false, std::string(name) + ": " + v);
  if (std::string(name) == "affine:Z/2")
    b.check(r.A == std::vector<int>{0, 1, 2, 4}, "affine:Z/2: A != {0,1,2,4}");
}

void c7(Builder& b) {
  isar_into(b, "powerset", kIsarPowerset);
  isar_into(b, "affine:Z/2", kIsarAffine);
}

void c8(Builder& b) {
  for (auto [name, top] : {std::pair<const char*, int>{"powerset", kIsarPowerset},
                           {"affine:Z/2", kIsarAffine}}) {
    auto M = builtin_monad(name);
    auto r = isar_chain_check(*M, upto(0, top), 2);
    b.check(r.retracts.size() == r.R.size(), std::string(name) + ": missing witnesses");
    int verified = 0;
    for (const auto& w : r.retracts) {
      // Independent re-check of r' . eta = id.
      int x = static_cast<int>(w.section.size());
      Fn eta = M->unit_table(M->base(x));
      bool left = true;
      for (int i = 0; i < x; ++i) left = left && w.left_inverse[eta[i]] == i;
      b.check(w.verified && left, std::string(name) + ": witness for " + std::to_string(x) +
                                      " fails r . eta = id");
      verified += w.verified && left;
    }
    b.note(std::string(name) + ": " + std::to_string(verified) + " of " +
           std::to_string(r.R.size()) + " retract witnesses verified, R = " + set_str(r.R));
  }
}

void c9(Builder& b) {
  auto w = upto(0, kMorphismMax);
  for (const auto& name : builtin_names()) {
    auto M = builtin_monad(name);
    auto r = monad_morphisms_from_identity(*M, w);
    b.note(name + ": " + std::to_string(r.naturals.size()) + " natural, " +
           std::to_string(r.morphisms.size()) + " monad morphisms");
    b.check(r.morphisms.size() == 1 && r.is_unit(r.morphisms[0], *M, w),
            name + ": monad morphisms out of the identity are not exactly the unit");
  }
}

void c10(Builder& b) {
  FinSetCategory S;
  auto w = upto(0, kTerminalMax);
  auto Id = identity_coaugmented(S, w);
  for (int mask = 1; mask < (1 << kTerminalMax); ++mask) {
    std::vector<int> D;
    for (int d = 1; d <= kTerminalMax; ++d)
      if (mask >> (d - 1) & 1) D.push_back(d);
    auto T = codensity_coaugmented(S, D, w);
    uint64_t t = terminality_count(T, D), i = terminality_count(Id, D);
    b.note("D = " + set_str(D) + ": T_D " + std::to_string(t) + ", identity " + std::to_string(i));
    b.check(t == 1, "D = " + set_str(D) + ": count for T_D is " + std::to_string(t));
    b.check(i == 1, "D = " + set_str(D) + ": count for the identity is " + std::to_string(i));
  }
  for (const char* name : {"powerset", "affine:Z/2"}) {
    auto M = builtin_monad(name);
    auto F = fakir(*M, w);
    auto FC = fakir_coaugmented(*M, F, S);
    auto D = algebra_sizes(*M, w);
    uint64_t n = terminality_count(FC, D);
    b.note(std::string("fakir(") + name + "), D = A = " + set_str(D) + ": " + std::to_string(n));
    b.check(d_preserving_check(FC, D), std::string("fakir(") + name + ") is not D-preserving");
    b.check(n == 1, std::string("fakir(") + name + "): count is " + std::to_string(n));
  }
}

void c11(Builder& b) {
  auto r = verify_basis_ndelta_plus(kBasisK, kBasisB);
  b.r.stamp = r.stamp();
  for (const auto& l : r.levels)
    b.note("level " + std::to_string(l.level) + ": chains " + std::to_string(l.chains) +
           ", words " + std::to_string(l.words) + ", basis " + std::to_string(l.basis));
  for (const auto& v : r.violations) b.check(false, v);
  auto h = verify_horn_generators_ndelta_plus(kHornLevels, kBasisB);
  for (const auto& l : h.levels)
    b.note("n = " + std::to_string(l.n) + ": |X_n| = " + std::to_string(l.nondegenerate) +
           ", |H_n| = " + std::to_string(l.H) + ", |H_n+1| = " + std::to_string(l.H_next));
  b.note("horn indices: " + h.verdict());
  for (const auto& v : h.violations) b.check(false, v);
  auto a = ndelta_horn_annotation(kHornLevels, kBasisB);
  for (const auto& idx : a.index)
    for (int i : idx) b.check(i == 0, "horn index " + std::to_string(i) + " is not 0");
}

void c12(Builder& b) {
  auto r = verify_basis_delta_inj(kInjN, kBasisB);
  b.r.stamp = r.stamp();
  for (const auto& l : r.levels) {
    b.note("level " + std::to_string(l.level) + ": chains " + std::to_string(l.chains) +
           ", generators " + std::to_string(l.basis));
    b.check(l.basis == static_cast<uint64_t>(l.level + 1),
            "level " + std::to_string(l.level) + ": generator count is not n+1");
  }
  b.check(r.delta1_bijection, "generator bijection fails");
  for (const auto& v : r.violations) b.check(false, v);
}

void c13(Builder& b) {
  auto P = powerset_monad();
  AlgebraStructure alg{kWalkingCarrier, powerset_chain_algebra(kWalkingCarrier)};
  b.check(is_algebra(*P, alg.carrier, alg.a), "max is not an algebra");
  auto r = walking_check(*P, alg, kWalkingCard);
  b.note(std::to_string(r.checked) + " composable pairs, " + std::to_string(r.symbolic) +
         " decided on generic elements, " + std::to_string(r.violations.size()) + " violations");
  for (const auto& v : r.violations) b.check(false, v);
}

void c14(Builder& b) {
  uint64_t n = 0;
  for (int d = 1; d <= kCanonicalMax; ++d)
    for (int c = 1; c <= kCanonicalMax; ++c)
      for (const auto& g : max_maps(d, c)) {
        ++n;
        auto [f, k] = max_canonical_form(g);
        b.check(max_from_canonical(f, k) == g, "round trip fails on " + g.str());
      }
  b.note(std::to_string(n) + " morphisms");
}

void c15(Builder& b) {
  auto pt = point_sset(kLiftDim);
  auto z2 = nerve(cyclic_group(2), kLiftDim);
  auto k = horn_lifting_check(to_point(z2, pt), HornClass::Kan, kLiftDim);
  b.note("nerve(Z/2): " + std::to_string(k.instances) + " horn instances, " + k.stamp());
  for (const auto& f : k.failures) b.check(false, "nerve(Z/2): " + f);
  auto arrow = nerve(arrow_category(), kLiftDim);
  auto inner = horn_lifting_check(to_point(arrow, pt), HornClass::Inner, kLiftDim);
  b.note("nerve([1]) inner: " + std::to_string(inner.instances) + " horn instances");
  for (const auto& f : inner.failures) b.check(false, "nerve([1]) inner: " + f);
  auto outer = horn_lifting_check(to_point(arrow, pt), HornClass::Kan, 2);
  std::string witness;
  for (const auto& f : outer.failures)
    if (witness.empty() && f.find("Lambda^2_0") != std::string::npos) witness = f;
  b.check(!witness.empty(), "nerve([1]): no witness for Lambda^2_0");
  if (!witness.empty()) b.note("nerve([1]) witness: " + witness);
}

void c16(Builder& b) {
  auto C = share(chain_poset({"a", "b", "c"}));
  auto L = reflector_and_localization(C, {1, 2});
  b.check(L.has_value(), "no reflector found");
  if (!L) return;
  b.note("L on objects: a -> " + C->object_name(L->L.on_objects[0]) + ", b -> " +
         C->object_name(L->L.on_objects[1]) + ", c -> " + C->object_name(L->L.on_objects[2]));
  b.check(L->triangles_ok, "triangle identities fail");
  b.check(L->limit_ok, "L(c) is not the limit over D_{c/}");
  b.check(L->eta_initial, "some eta_c is not initial in D_{c/}");
  for (const auto& n : L->notes) b.note(n);
}

void c17(Builder& b) {
  auto K = share(simplex_category(SimplexKind::Delta, 1, 4));
  auto J = share(simplex_category(SimplexKind::Delta, 1, 2));
  FinFunctor inc{J, K, {0, 1}, {}};
  for (int f = 0; f < J->num_morphisms(); ++f)
    inc.on_morphisms.push_back(*K->find_morphism(J->morphism(f).name));
  b.check(validate_functor(inc).ok, "inclusion is not a functor");
  auto r = is_initial_functor(inc);
  b.note("comma categories (F | d): objects " + join_ints(r.comma_objects, ",") +
         ", components " + join_ints(r.components, ","));
  for (const auto& f : r.failures) b.check(false, f);
  b.check(r.initial, "inclusion is not initial");
}

struct Spec {
  const char* title;
  const char* anchor;
  const char* stamp;
  void (*run)(Builder&);
};

const std::map<int, Spec>& specs() {
  static const std::map<int, Spec> s = {
      {1, {"monad laws", "is an ordinary monad",
           "set sizes 0..4", c1}},
      {2, {"fakir of powerset", "equalizer of two natural transformations Mη, ηM : M → M²", "set sizes 0..4", c2}},
      {3, {"codensity identity on D", "the canonical map d → F(d) is an equivalence for all objects d of D", "D within FinSet sizes 0..3", c3}},
      {4, {"codensity sizes", "right Kan extension of the inclusion D ↪ C along itself", "c = 3", c4}},
      {5, {"double dual", "double dual functor on the category",
           "FinVect(F2), D = {F2, F2^2}, dim 0..3", c5}},
      {6, {"fakir against codensity", "equivalent to the M-completion",
           "bounds 1..4, c in 0..3", c6}},
      {7, {"isar chain", "There are inclusions", "powerset sizes 0..5, affine:Z/2 sizes 0..4", c7}},
      {8, {"retract witnesses", "the morphism η_c : c → M₀ ⊘ c is left invertible", "powerset sizes 0..5, affine:Z/2 sizes 0..4",
           c8}},
      {9, {"uniqueness from identity", "the initial object of mon∞(E)", "set sizes 0..3", c9}},
      {10, {"terminality counts", "terminal D-preserving coaugmented functor", "set sizes 0..3", c10}},
      {11, {"N(Delta_+) basis", "The simplicial monoid N(Δ₊) is free; all the horn indices are equal to 0",
            "level <= 3, ordinal size <= 4; horns n <= 2", c11}},
      {12, {"Delta_+^inj basis", "basis consisting of functors f_{k,n}", "level <= 4, ordinal size <= 4", c12}},
      {13, {"walking action", "there exists a unique morphism of strict action categories", "ordinal sizes <= 4, carrier 3", c13}},
      {14, {"max canonical form", "uniquely presented as f ⋆ aⁿ", "ordinal sizes 1..6", c14}},
      {15, {"horn lifting", "left lifting property with respect to", "dimension <= 3", c15}},
      {16, {"localization", "initial object of D_{c/}", "a <= b <= c, D = {b, c}", c16}},
      {17, {"cofinality", "left cofinal subcategory of Δ", "ordinals of size <= 4", c17}},
  };
  return s;
}

}  // namespace

std::vector<int> suite_criteria(const std::string& suite) {
  if (suite == "paper") return upto(1, kCriteria);
  if (suite == "quick") return {2, 3, 4, 5, 8, 9, 10, 12, 13, 14, 15, 16, 17};
  throw std::invalid_argument("unknown suite '" + suite + "' (expected paper or quick)");
}

CriterionResult run_criterion(int id) {
  auto it = specs().find(id);
  if (it == specs().end()) throw std::invalid_argument("no criterion " + std::to_string(id));
  Builder b;
  b.r.id = id;
  b.r.title = it->second.title;
  b.r.anchor = it->second.anchor;
  b.r.stamp = it->second.stamp;
  b.r.pass = true;
  auto t0 = std::chrono::steady_clock::now();
  it->second.run(b);
  if (b.r.seconds == 0) b.r.seconds = since(t0);
  return b.r;
}

}  // namespace ck
