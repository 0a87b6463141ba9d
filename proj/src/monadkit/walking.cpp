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

#include "ck/monadkit/walking.hpp"

namespace ck {
namespace {

void record(ProgramCheck& r, const ProgramEvaluator::Comparison& c, const std::string& what) {
  ++r.checked;
  if (c.symbolic) ++r.symbolic;
  if (!c.equal && r.violations.size() < 50) r.violations.push_back(what + ": " + c.detail);
}

Program concat(Program a, const Program& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

ProgramCheck cobar_check(const Monad& M, int x, int levels) {
  ProgramCheck r;
  ProgramEvaluator ev(M, x);
  const int top = levels + 1;
  for (int a = 0; a <= top; ++a) {
    record(r, ev.compare(phi_program(ord_identity(a)), {}, a), "phi(id) at " + ordinal_name(a));
    for (int b = 0; b <= top; ++b)
      for (const OrdMap& f : monotone_maps(a, b))
        for (int c = 0; c <= top; ++c)
          for (const OrdMap& g : monotone_maps(b, c))
            record(r,
                   ev.compare(phi_program(ord_compose(g, f)),
                              concat(phi_program(f), phi_program(g)), a),
                   "phi(" + g.str() + " o " + f.str() + ")");
  }
  return r;
}

Fn walking_action(const Monad& M, const AlgebraStructure& alg, const OrdMap& g) {
  ProgramEvaluator ev(M, alg.carrier, &alg.a);
  return ev.run(walking_program(g), g.dom - 1);
}

ProgramCheck walking_check(const Monad& M, const AlgebraStructure& alg, int max_card) {
  ProgramCheck r;
  ProgramEvaluator ev(M, alg.carrier, &alg.a);
  for (int p = 1; p <= max_card; ++p) {
    record(r, ev.compare(walking_program(ord_identity(p)), {}, p - 1),
           "psi(id) at " + ordinal_name(p));
    for (int q = 1; q <= max_card; ++q)
      for (const OrdMap& g1 : max_maps(p, q))
        for (int s = 1; s <= max_card; ++s)
          for (const OrdMap& g2 : max_maps(q, s))
            record(r,
                   ev.compare(walking_program(max_compose(g2, g1)),
                              concat(walking_program(g1), walking_program(g2)), p - 1),
                   "psi(" + g2.str() + " o " + g1.str() + ")");
  }
  return r;
}

}  // namespace ck
