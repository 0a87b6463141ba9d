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

#include "ck/monadkit/table_monad.hpp"

#include <set>

namespace ck {

Carrier TableMonad::apply(Carrier X) const {
  auto it = on_objects.find(X.base);
  if (X.depth != 0 || it == on_objects.end())
    throw MissingTable(label + ": T(" + std::to_string(X.base) + ") is not tabulated");
  return {0, it->second};
}

uint64_t TableMonad::size(Carrier X) const { return static_cast<uint64_t>(X.base); }

int TableMonad::unit(Carrier X, int x) const {
  auto it = unit_of.find(X.base);
  if (it == unit_of.end()) throw MissingTable(label + ": no unit at " + std::to_string(X.base));
  return it->second.at(x);
}

int TableMonad::mult(Carrier X, int e) const {
  auto it = mult_of.find(X.base);
  if (it == mult_of.end())
    throw MissingTable(label + ": no multiplication at " + std::to_string(X.base));
  return it->second.at(e);
}

int TableMonad::fmap(Carrier X, Carrier Y, const Fn& h, int e) const {
  auto it = on_functions.find({X.base, Y.base});
  if (it != on_functions.end()) {
    auto jt = it->second.find(h);
    if (jt != it->second.end()) return jt->second.at(e);
  }
  throw MissingTable(label + ": T of [" + join_ints(h) + "] : " + std::to_string(X.base) +
                     " -> " + std::to_string(Y.base) + " is not tabulated");
}

TableMonad tabulate(const Monad& M, const std::vector<int>& window) {
  TableMonad T;
  T.label = M.name();
  T.window = window;
  for (int x : window) {
    Carrier X = M.base(x), TX = M.apply(X), TTX = M.apply(TX);
    const int tx = M.checked_size(TX);
    T.on_objects[x] = tx;
    T.on_objects[tx] = M.checked_size(TTX);
    T.unit_of[x] = M.unit_table(X);
    T.unit_of[tx] = M.unit_table(TX);
    T.mult_of[x] = M.mult_table(X);
  }
  uint64_t entries = 0;
  for (int x : window)
    for (int y : window) {
      Carrier X = M.base(x), Y = M.base(y);
      entries += ipow(y, x) * (M.size(M.apply(M.apply(X))) + M.size(M.apply(X)));
      if (entries > guard_limit())
        throw ResourceError("tabulating " + M.name() + " needs more than " +
                            std::to_string(guard_limit()) + " table entries");
      for (const Fn& h : all_functions(x, y)) {
        Fn th = M.fmap_table(X, Y, h);
        T.on_functions[{x, y}][h] = th;
        T.on_functions[{T.on_objects[x], T.on_objects[y]}][th] =
            M.fmap_table(M.apply(X), M.apply(Y), th);
      }
    }
  return T;
}

json table_monad_to_json(const TableMonad& T) {
  json j;
  j["name"] = T.label;
  j["window"] = T.window;
  json obj = json::object(), unit = json::object(), mult = json::object();
  for (auto& [x, t] : T.on_objects) obj[std::to_string(x)] = t;
  for (auto& [x, t] : T.unit_of) unit[std::to_string(x)] = t;
  for (auto& [x, t] : T.mult_of) mult[std::to_string(x)] = t;
  j["onObjects"] = obj;
  j["unit"] = unit;
  j["mult"] = mult;
  json fns = json::array();
  for (auto& [key, m] : T.on_functions)
    for (auto& [h, th] : m)
      fns.push_back({{"dom", key.first}, {"cod", key.second}, {"map", h}, {"image", th}});
  j["onFunctions"] = fns;
  return j;
}

namespace {
int parse_key(const std::string& k) {
  try {
    size_t used = 0;
    int v = std::stoi(k, &used);
    if (used == k.size() && v >= 0) return v;
  } catch (const std::exception&) {
  }
  throw StructureError("monad file: object key '" + k + "' is not a size");
}
}  // namespace

TableMonad table_monad_from_json(const json& j) {
  TableMonad T;
  try {
    T.label = j.value("name", std::string("table"));
    T.window = j.at("window").get<std::vector<int>>();
    for (auto& [k, v] : j.at("onObjects").items()) T.on_objects[parse_key(k)] = v.get<int>();
    for (auto& [k, v] : j.at("unit").items()) T.unit_of[parse_key(k)] = v.get<Fn>();
    for (auto& [k, v] : j.at("mult").items()) T.mult_of[parse_key(k)] = v.get<Fn>();
    for (const json& f : j.at("onFunctions"))
      T.on_functions[{f.at("dom").get<int>(), f.at("cod").get<int>()}][f.at("map").get<Fn>()] =
          f.at("image").get<Fn>();
  } catch (const json::exception& e) {
    throw StructureError(std::string("monad file: ") + e.what());
  }
  // Shape checks; the laws are left to monad_law_check.
  auto tsize = [&](int x) {
    auto it = T.on_objects.find(x);
    if (it == T.on_objects.end())
      throw StructureError("monad file: T(" + std::to_string(x) + ") missing");
    return it->second;
  };
  auto in_range = [](const Fn& f, int n, int m) {
    if (static_cast<int>(f.size()) != n) return false;
    for (int v : f)
      if (v < 0 || v >= m) return false;
    return true;
  };
  for (int x : T.window) tsize(x);
  for (auto& [x, u] : T.unit_of)
    if (!in_range(u, x, tsize(x)))
      throw StructureError("monad file: unit at " + std::to_string(x) + " has the wrong shape");
  for (auto& [x, m] : T.mult_of)
    if (!in_range(m, tsize(tsize(x)), tsize(x)))
      throw StructureError("monad file: mult at " + std::to_string(x) + " has the wrong shape");
  for (auto& [key, fs] : T.on_functions)
    for (auto& [h, th] : fs)
      if (!in_range(h, key.first, key.second) ||
          !in_range(th, tsize(key.first), tsize(key.second)))
        throw StructureError("monad file: function entry " + std::to_string(key.first) + " -> " +
                             std::to_string(key.second) + " has the wrong shape");
  return T;
}

}  // namespace ck
