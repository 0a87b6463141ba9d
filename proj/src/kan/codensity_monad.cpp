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

#include "ck/kan/codensity_monad.hpp"

namespace ck {

CodensityMonad::CodensityMonad(std::vector<int> D) : D_(std::move(D)) {}

std::string CodensityMonad::name() const { return "codensity{" + join_ints(D_) + "}"; }

const CodensityValue& CodensityMonad::value(int c) const {
  auto it = values_.find(c);
  if (it != values_.end()) return it->second;
  return values_.emplace(c, codensity_value(finset_, D_, c)).first->second;
}

int CodensityMonad::mult(Carrier X, int e) const {
  const CodensityValue& inner = value(X.base);
  const CodensityValue& outer = value(inner.size());
  const Fn& Phi = outer.elements.at(e);
  Fn phi(inner.offset.back());
  for (size_t i = 0; i < D_.size(); ++i) {
    const auto& fs = finset_.hom(X.base, D_[i]);
    for (size_t k = 0; k < fs.size(); ++k) {
      // ev_f : T(X) -> d sends a family to its value at f.
      Fn ev(inner.size());
      for (int p = 0; p < inner.size(); ++p) ev[p] = inner.elements[p][inner.offset[i] + k];
      auto idx = finset_.find(inner.size(), D_[i], ev);
      phi[inner.offset[i] + k] = Phi[outer.offset[i] + *idx];
    }
  }
  auto r = inner.find(phi);
  if (!r) throw std::logic_error("multiplication left the natural families");
  return *r;
}

int CodensityMonad::fmap(Carrier X, Carrier Y, const Fn& h, int e) const {
  auto& table = maps_[{X.base, Y.base}];
  auto it = table.find(h);
  if (it == table.end())
    it = table.emplace(h, codensity_map(finset_, value(X.base), value(Y.base), h)).first;
  return it->second.at(e);
}

}  // namespace ck
