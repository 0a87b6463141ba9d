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

#include "ck/kan/families.hpp"

#include <string>

namespace ck {

namespace {

class Solver {
 public:
  explicit Solver(const FamilyProblem& p) : p_(p) {
    const int nb = static_cast<int>(p.dom.size());
    offset_.resize(nb + 1, 0);
    for (int b = 0; b < nb; ++b) offset_[b + 1] = offset_[b] + p.dom[b];
    block_of_.resize(offset_[nb]);
    for (int b = 0; b < nb; ++b)
      for (int e = 0; e < p.dom[b]; ++e) block_of_[offset_[b] + e] = b;
    out_.resize(nb);
    for (size_t a = 0; a < p.arrows.size(); ++a) {
      const auto& ar = p.arrows[a];
      if (ar.src < 0 || ar.src >= nb || ar.tgt < 0 || ar.tgt >= nb ||
          static_cast<int>(ar.fmap.size()) != p.dom[ar.src] ||
          static_cast<int>(ar.gmap.size()) != p.cod[ar.src])
        throw StructureError("family arrow " + std::to_string(a) + " has mismatched tables");
      out_[ar.src].push_back(static_cast<int>(a));
    }
    value_.assign(offset_[nb], -1);
  }

  void run(const std::function<bool(const std::vector<int>&)>& visit) {
    for (const auto& pin : p_.pins)
      if (!assign(offset_.at(pin.block) + pin.var, pin.value)) return;
    visit_ = &visit;
    search(0);
  }

 private:
  bool assign(int var, int val) {
    std::vector<std::pair<int, int>> queue{{var, val}};
    while (!queue.empty()) {
      auto [v, x] = queue.back();
      queue.pop_back();
      const int b = block_of_[v];
      if (x < 0 || x >= p_.cod[b]) return false;
      if (value_[v] >= 0) {
        if (value_[v] != x) return false;
        continue;
      }
      value_[v] = x;
      trail_.push_back(v);
      const int e = v - offset_[b];
      for (int a : out_[b]) {
        const auto& ar = p_.arrows[a];
        queue.push_back({offset_[ar.tgt] + ar.fmap[e], ar.gmap[x]});
      }
    }
    return true;
  }

  void undo(size_t mark) {
    while (trail_.size() > mark) {
      value_[trail_.back()] = -1;
      trail_.pop_back();
    }
  }

  // Returns false when the visitor asked to stop.
  bool search(int from) {
    if (++nodes_ > guard_limit())
      throw ResourceError("family search exceeded the guard of " + std::to_string(guard_limit()) +
                          " nodes");
    int v = from;
    while (v < static_cast<int>(value_.size()) && value_[v] >= 0) ++v;
    if (v == static_cast<int>(value_.size())) return (*visit_)(value_);
    const int b = block_of_[v];
    for (int x = 0; x < p_.cod[b]; ++x) {
      size_t mark = trail_.size();
      bool ok = assign(v, x);
      bool go_on = !ok || search(v + 1);
      undo(mark);
      if (!go_on) return false;
    }
    return true;
  }

  const FamilyProblem& p_;
  std::vector<int> offset_;
  std::vector<int> block_of_;
  std::vector<std::vector<int>> out_;
  std::vector<int> value_;
  std::vector<int> trail_;
  uint64_t nodes_ = 0;
  const std::function<bool(const std::vector<int>&)>* visit_ = nullptr;
};

}  // namespace

void solve_families(const FamilyProblem& p,
                    const std::function<bool(const std::vector<int>&)>& visit) {
  Solver s(p);
  s.run(visit);
}

std::vector<std::vector<int>> all_families(const FamilyProblem& p) {
  std::vector<std::vector<int>> out;
  solve_families(p, [&](const std::vector<int>& v) {
    if (out.size() >= guard_limit()) throw ResourceError("too many families to store");
    out.push_back(v);
    return true;
  });
  return out;
}

uint64_t count_families(const FamilyProblem& p) {
  uint64_t n = 0;
  solve_families(p, [&](const std::vector<int>&) {
    ++n;
    return true;
  });
  return n;
}

}  // namespace ck
