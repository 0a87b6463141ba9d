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
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ck/common.hpp"
#include "ck/fincat/category.hpp"

namespace ck {

struct FnHash {
  size_t operator()(const std::vector<int>& v) const noexcept {
    size_t h = 1469598103934665603ULL;
    for (int x : v) h = (h ^ static_cast<size_t>(x + 0x9e3779b9)) * 1099511628211ULL;
    return h;
  }
};

// A category whose objects carry finite underlying sets and whose morphisms are
// realized as functions. Objects are integers; hom sets are enumerated on demand
// in a fixed order. Limits are created in underlying sets.
class ConcreteCategory {
 public:
  virtual ~ConcreteCategory() = default;
  virtual std::string name() const = 0;
  virtual int underlying_size(int obj) const = 0;
  virtual std::string object_name(int obj) const { return std::to_string(obj); }
  virtual bool faithful() const { return true; }
  virtual bool has_object(int obj) const { return obj >= 0; }

  // Realized morphisms a -> b.
  const std::vector<Fn>& hom(int a, int b) const;
  // Index of hom(b,c)[g] o hom(a,b)[f] inside hom(a,c).
  virtual int compose_index(int a, int b, int c, int g, int f) const;
  std::optional<int> find(int a, int b, const Fn& fn) const;
  int identity_index(int a) const;

 protected:
  virtual std::vector<Fn> enumerate_hom(int a, int b) const = 0;

 private:
  struct HomData {
    std::vector<Fn> fns;
    std::unordered_map<Fn, int, FnHash> index;
  };
  const HomData& data(int a, int b) const;
  mutable std::map<std::pair<int, int>, HomData> cache_;
};

Fn compose_fn(const Fn& g, const Fn& f);  // g o f
Fn identity_fn(int n);

// Skeletal finite sets; object n is {0..n-1}.
class FinSetCategory : public ConcreteCategory {
 public:
  std::string name() const override { return "FinSet"; }
  int underlying_size(int obj) const override { return obj; }

 protected:
  std::vector<Fn> enumerate_hom(int a, int b) const override;
};

// F_p^k for prime p; vectors are encoded in base p, coordinate 0 least significant.
class FinVectCategory : public ConcreteCategory {
 public:
  explicit FinVectCategory(int p = 2) : p_(p) {}
  std::string name() const override { return "FinVect(F" + std::to_string(p_) + ")"; }
  int underlying_size(int obj) const override { return static_cast<int>(ipow(p_, obj)); }
  std::string object_name(int obj) const override {
    return "F" + std::to_string(p_) + "^" + std::to_string(obj);
  }
  int prime() const { return p_; }

 protected:
  std::vector<Fn> enumerate_hom(int a, int b) const override;

 private:
  int p_;
};

// A concrete category given by a finite category plus underlying sets and a
// realization of every morphism.
class TableConcreteCategory : public ConcreteCategory {
 public:
  TableConcreteCategory(CatPtr base, std::vector<int> sizes, std::vector<Fn> realize,
                        bool faithful = true);
  std::string name() const override { return "table"; }
  int underlying_size(int obj) const override { return sizes_.at(obj); }
  std::string object_name(int obj) const override { return base_->object_name(obj); }
  bool faithful() const override { return faithful_; }
  bool has_object(int obj) const override { return obj >= 0 && obj < base_->num_objects(); }
  int compose_index(int a, int b, int c, int g, int f) const override;
  const FinCategory& base() const { return *base_; }
  // Functoriality of realize plus the declared faithfulness.
  ValidationReport validate() const;

 protected:
  std::vector<Fn> enumerate_hom(int a, int b) const override;

 private:
  CatPtr base_;
  std::vector<int> sizes_;
  std::vector<Fn> realize_;
  bool faithful_;
};

// Full subcategory on the listed objects as an explicit FinCategory.
struct Materialized {
  CatPtr cat;
  std::vector<int> objects;
  std::vector<std::pair<int, int>> morphism_source;  // (hom pair index, position)
};
Materialized materialize(const ConcreteCategory& amb, const std::vector<int>& objects);

}  // namespace ck
