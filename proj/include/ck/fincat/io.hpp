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

#include <memory>
#include <string>

#include "ck/fincat/category.hpp"
#include "ck/fincat/concrete.hpp"
#include "json.hpp"

namespace ck {

using json = nlohmann::json;

// Category files: {"objects": [...], "morphisms": [{"id","src","tgt"}],
// "compose": [[g, f, g.f], ...], "identities": {obj: id}} with optional
// "underlying": {obj: n} and "realize": {id: [..]}. Identities are inferred
// when the section is absent. Keys are sorted on output, so dumps are byte-stable.
json category_to_json(const FinCategory& c);
FinCategory category_from_json(const json& j);
std::unique_ptr<TableConcreteCategory> concrete_from_json(const json& j);
json concrete_to_json(const TableConcreteCategory& c);

json read_json_file(const std::string& path);  // throws StructureError with diagnostics
std::string dump_stable(const json& j);

}  // namespace ck
