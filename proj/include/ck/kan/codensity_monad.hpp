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

#include <map>
#include <memory>
#include <vector>

#include "ck/kan/codensity.hpp"
#include "ck/monadkit/monad.hpp"

namespace ck {

// T_D on skeletal finite sets as a monad: eta by evaluation families and
// mu(Phi)_d(f) = Phi_d(ev_f). Carriers are sizes; values are computed on
// demand and memoized.
class CodensityMonad : public Monad {
 public:
  explicit CodensityMonad(std::vector<int> D);
  std::string name() const override;
  Carrier apply(Carrier X) const override { return {0, value(X.base).size()}; }
  uint64_t size(Carrier X) const override { return static_cast<uint64_t>(X.base); }
  int unit(Carrier X, int x) const override { return value(X.base).unit[x]; }
  int mult(Carrier X, int e) const override;
  int fmap(Carrier X, Carrier Y, const Fn& h, int e) const override;

  const CodensityValue& value(int c) const;
  const std::vector<int>& D() const { return D_; }

 private:
  FinSetCategory finset_;
  std::vector<int> D_;
  mutable std::map<int, CodensityValue> values_;
  mutable std::map<std::pair<int, int>, std::map<Fn, Fn>> maps_;
};

}  // namespace ck
