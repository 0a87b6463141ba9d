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

#include "ck/fincat/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace ck {

json category_to_json(const FinCategory& c) {
  json j;
  std::vector<std::string> objs = c.objects();
  std::sort(objs.begin(), objs.end());
  j["objects"] = objs;
  std::vector<json> mors;
  std::vector<Id> order(c.num_morphisms());
  for (int f = 0; f < c.num_morphisms(); ++f) order[f] = f;
  std::sort(order.begin(), order.end(),
            [&](Id a, Id b) { return c.morphism(a).name < c.morphism(b).name; });
  for (Id f : order)
    mors.push_back({{"id", c.morphism(f).name},
                    {"src", c.object_name(c.src(f))},
                    {"tgt", c.object_name(c.tgt(f))}});
  j["morphisms"] = mors;
  std::vector<std::vector<std::string>> triples;
  for (Id g : order)
    for (Id f : order)
      if (c.tgt(f) == c.src(g))
        triples.push_back({c.morphism(g).name, c.morphism(f).name,
                           c.morphism(c.compose(g, f)).name});
  j["compose"] = triples;
  json ids = json::object();
  for (int o = 0; o < c.num_objects(); ++o)
    ids[c.object_name(o)] = c.morphism(c.identity(o)).name;
  j["identities"] = ids;
  return j;
}

FinCategory category_from_json(const json& j) {
  try {
    std::vector<std::string> objs = j.at("objects").get<std::vector<std::string>>();
    std::map<std::string, Id> oidx;
    for (size_t i = 0; i < objs.size(); ++i) {
      if (oidx.count(objs[i])) throw StructureError("duplicate object " + objs[i]);
      oidx[objs[i]] = static_cast<Id>(i);
    }
    std::vector<Morphism> mors;
    std::map<std::string, Id> midx;
    for (const auto& m : j.at("morphisms")) {
      std::string id = m.at("id"), s = m.at("src"), t = m.at("tgt");
      if (!oidx.count(s) || !oidx.count(t))
        throw StructureError("morphism " + id + " names an unknown object");
      if (midx.count(id)) throw StructureError("duplicate morphism " + id);
      midx[id] = static_cast<Id>(mors.size());
      mors.push_back({id, oidx[s], oidx[t]});
    }
    const size_t m = mors.size();
    std::vector<Id> table(m * m, -1);
    for (const auto& t : j.at("compose")) {
      if (!t.is_array() || t.size() != 3) throw StructureError("compose entries must be triples");
      std::string g = t[0], f = t[1], h = t[2];
      if (!midx.count(g) || !midx.count(f) || !midx.count(h))
        throw StructureError("compose triple names an unknown morphism: " + t.dump());
      table[midx[g] * m + midx[f]] = midx[h];
    }
    std::vector<Id> ids(objs.size(), -1);
    if (j.contains("identities")) {
      for (auto& [o, id] : j.at("identities").items()) {
        if (!oidx.count(o) || !midx.count(id.get<std::string>()))
          throw StructureError("identity entry names an unknown object or morphism");
        ids[oidx[o]] = midx[id.get<std::string>()];
      }
    } else {
      for (size_t o = 0; o < objs.size(); ++o)
        for (size_t e = 0; e < m && ids[o] < 0; ++e) {
          if (mors[e].src != static_cast<Id>(o) || mors[e].tgt != static_cast<Id>(o)) continue;
          bool unit = true;
          for (size_t f = 0; f < m && unit; ++f) {
            if (mors[f].tgt == static_cast<Id>(o) && table[e * m + f] != static_cast<Id>(f)) unit = false;
            if (mors[f].src == static_cast<Id>(o) && table[f * m + e] != static_cast<Id>(f)) unit = false;
          }
          if (unit) ids[o] = static_cast<Id>(e);
        }
    }
    for (size_t o = 0; o < objs.size(); ++o)
      if (ids[o] < 0) throw StructureError("no identity for object " + objs[o]);
    return FinCategory::from_table(objs, mors, ids, table);
  } catch (const json::exception& e) {
    throw StructureError(std::string("category file: ") + e.what());
  }
}

std::unique_ptr<TableConcreteCategory> concrete_from_json(const json& j) {
  auto base = share(category_from_json(j));
  try {
    std::vector<int> sizes(base->num_objects(), 0);
    for (int o = 0; o < base->num_objects(); ++o)
      sizes[o] = j.at("underlying").at(base->object_name(o)).get<int>();
    std::vector<Fn> realize(base->num_morphisms());
    for (int f = 0; f < base->num_morphisms(); ++f)
      realize[f] = j.at("realize").at(base->morphism(f).name).get<Fn>();
    bool faithful = j.value("faithful", true);
    return std::make_unique<TableConcreteCategory>(base, sizes, realize, faithful);
  } catch (const json::exception& e) {
    throw StructureError(std::string("concrete category file: ") + e.what());
  }
}

json concrete_to_json(const TableConcreteCategory& c) {
  json j = category_to_json(c.base());
  json u = json::object(), r = json::object();
  for (int o = 0; o < c.base().num_objects(); ++o) {
    u[c.base().object_name(o)] = c.underlying_size(o);
  }
  for (int a = 0; a < c.base().num_objects(); ++a)
    for (int b = 0; b < c.base().num_objects(); ++b) {
      const auto& ms = c.base().hom(a, b);
      const auto& fs = c.hom(a, b);
      for (size_t k = 0; k < ms.size(); ++k) r[c.base().morphism(ms[k]).name] = fs[k];
    }
  j["underlying"] = u;
  j["realize"] = r;
  j["faithful"] = c.faithful();
  return j;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructureError("cannot open file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw StructureError("parse error in " + path + ": " + e.what());
  }
}

std::string dump_stable(const json& j) { return j.dump(2) + "\n"; }

}  // namespace ck
