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
#include <string>
#include <utility>
#include <vector>

#include "ck/fincat/io.hpp"
#include "ck/monadkit/monad.hpp"

namespace ck {

// Raised when a table monad is asked for data outside its tables.
class MissingTable : public StructureError {
 public:
  explicit MissingTable(const std::string& what) : StructureError(what) {}
};

// A monad on a skeleton of finite sets given by explicit tables. Carriers are
// always depth 0; T(n) is looked up in on_objects.
class TableMonad : public Monad {
 public:
  std::string label = "table";
  std::vector<int> window;
  std::map<int, int> on_objects;
  std::map<int, Fn> unit_of;  // x -> (x -> T(x))
  std::map<int, Fn> mult_of;  // x -> (T(T(x)) -> T(x))
  std::map<std::pair<int, int>, std::map<Fn, Fn>> on_functions;

  std::string name() const override { return label; }
  Carrier apply(Carrier X) const override;
  uint64_t size(Carrier X) const override;
  int unit(Carrier X, int x) const override;
  int mult(Carrier X, int e) const override;
  int fmap(Carrier X, Carrier Y, const Fn& h, int e) const override;
};

// Tables of M on the window: objects up to T^2, units on the window and its
// image, multiplications on the window, and T(h) for every h between window
// objects and for T(h) itself.
TableMonad tabulate(const Monad& M, const std::vector<int>& window);

json table_monad_to_json(const TableMonad& T);
TableMonad table_monad_from_json(const json& j);

}  // namespace ck
