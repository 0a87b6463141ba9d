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
#include <string>
#include <tuple>
#include <vector>

#include "ck/fincat/ordinal.hpp"
#include "ck/monadkit/monad.hpp"

namespace ck {

// A natural map between powers of T built from eta, mu and an algebra a.
// A step at layer i acts below i outer layers: Unit@i is T^i(eta), Mult@i is
// T^i(mu) and Act@i is T^i(a), the latter only at the innermost layer.
enum class StepKind { Unit, Mult, Act };
struct Step {
  StepKind kind;
  int layer;
  bool operator==(const Step& o) const { return kind == o.kind && layer == o.layer; }
};
using Program = std::vector<Step>;  // applied first to last

std::string program_string(const Program& p);
// Depth after running p from depth d; throws StructureError on an invalid step.
int program_output_depth(const Program& p, int d);

// The cobar functor on a monotone map f: T^{f.dom} => T^{f.cod}.
Program phi_program(const OrdMap& f);
// psi(f * a^n) = phi(f) followed by a^n at the inner layers, on T^{g.dom - 1}(x).
Program walking_program(const OrdMap& g);

// Runs programs on T^d(x) for one monad, carrier x and optional algebra.
class ProgramEvaluator {
 public:
  ProgramEvaluator(const Monad& M, int x, const Fn* algebra = nullptr);

  // Largest d such that T^0(x) .. T^d(x) are all enumerable.
  int enumerable_depth() const { return max_depth_; }

  // Concrete function of p on T^d(x); throws ResourceError when a level
  // on the way cannot be enumerated.
  Fn run(const Program& p, int d);

  struct Comparison {
    bool equal = false;
    bool symbolic = false;  // decided on generic elements
    std::string detail;     // witness or reason on failure
  };
  // Compares p and q as maps out of T^d(x). When a level is too large the
  // comparison runs on a generic element, rewriting only with the monad and
  // algebra laws; a structural mismatch there is reported as undecided.
  Comparison compare(const Program& p, const Program& q, int d);

 private:
  Carrier level(int d) const { return M_.power(x_, d); }
  const Fn& table(const Step& s, int d);

  const Monad& M_;
  int x_;
  const Fn* a_;
  int max_depth_ = 0;
  std::map<std::tuple<int, int, int>, Fn> memo_;
};

}  // namespace ck
