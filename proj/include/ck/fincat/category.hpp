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

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ck {

using Id = int;

struct Morphism {
  std::string name;
  Id src = 0;
  Id tgt = 0;
};

// A finite category with a dense composition table; table[g * m + f] = g o f
// or -1 when tgt(f) != src(g).
class FinCategory {
 public:
  FinCategory() = default;

  // compose(g, f) is only called on composable pairs and must return a
  // morphism index; identities[o] is the identity of object o.
  static FinCategory build(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                           std::vector<Id> identities,
                           const std::function<Id(Id, Id)>& compose);

  // Raw constructor used by the file loader and by tests that need broken tables.
  static FinCategory from_table(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                                std::vector<Id> identities, std::vector<Id> table);

  int num_objects() const { return static_cast<int>(objects_.size()); }
  int num_morphisms() const { return static_cast<int>(morphisms_.size()); }
  const std::string& object_name(Id o) const { return objects_[o]; }
  const Morphism& morphism(Id f) const { return morphisms_[f]; }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Morphism>& morphisms() const { return morphisms_; }
  Id src(Id f) const { return morphisms_[f].src; }
  Id tgt(Id f) const { return morphisms_[f].tgt; }
  Id identity(Id o) const { return identities_[o]; }
  const std::vector<Id>& identities() const { return identities_; }
  Id compose(Id g, Id f) const { return table_[static_cast<size_t>(g) * morphisms_.size() + f]; }
  const std::vector<Id>& hom(Id a, Id b) const { return hom_[static_cast<size_t>(a) * objects_.size() + b]; }
  bool is_identity(Id f) const { return identities_[src(f)] == f; }

  std::optional<Id> find_object(const std::string& name) const;
  std::optional<Id> find_morphism(const std::string& name) const;

 private:
  void index();

  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<Id> identities_;
  std::vector<Id> table_;
  std::vector<std::vector<Id>> hom_;
  std::map<std::string, Id> object_index_;
  std::map<std::string, Id> morphism_index_;
};

using CatPtr = std::shared_ptr<const FinCategory>;

inline CatPtr share(FinCategory c) { return std::make_shared<const FinCategory>(std::move(c)); }

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
  void fail(std::string msg) {
    ok = false;
    violations.push_back(std::move(msg));
  }
};

ValidationReport validate_category(const FinCategory& c);

struct FinFunctor {
  CatPtr dom;
  CatPtr cod;
  std::vector<Id> on_objects;
  std::vector<Id> on_morphisms;
};

ValidationReport validate_functor(const FinFunctor& f);
FinFunctor identity_functor(const CatPtr& c);
FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f);  // g o f
FinFunctor constant_functor(const CatPtr& dom, const CatPtr& cod, Id object);
bool functors_equal(const FinFunctor& a, const FinFunctor& b);

struct NatTransf {
  FinFunctor source;
  FinFunctor target;
  std::vector<Id> components;
};

ValidationReport validate_nat(const NatTransf& t);

// Builders.
FinCategory terminal_category();
FinCategory empty_category();
FinCategory discrete_category(int n);
// leq[i][j] true iff i <= j; must be a partial order.
FinCategory poset_category(const std::vector<std::string>& names,
                           const std::vector<std::vector<bool>>& leq);
FinCategory chain_poset(const std::vector<std::string>& names);
FinCategory arrow_category();  // [1]: 0 -> 1
FinCategory cyclic_group(int n);
FinCategory opposite(const FinCategory& c);
FinCategory product(const FinCategory& a, const FinCategory& b);

struct Subcategory {
  CatPtr cat;
  FinFunctor inclusion;
};
Subcategory full_subcategory(const CatPtr& c, const std::vector<Id>& objects);

}  // namespace ck
