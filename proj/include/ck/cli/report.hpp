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

#include <string>
#include <vector>

#include "json.hpp"

namespace ck {

constexpr int kReportSchema = 1;

enum class Verdict { Pass, Fail, Evidence };
std::string verdict_name(Verdict v);

struct ReportTable {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Everything a verb prints. Numbers in tables are read against `stamp`.
struct Report {
  std::string verb;  // the command line without --out and --format
  std::string stamp;
  Verdict verdict = Verdict::Pass;
  std::string anchor;
  std::vector<std::string> notes;
  std::vector<ReportTable> tables;
  std::vector<std::string> counterexamples;
  nlohmann::json data;  // verb-specific structured payload, json output only

  void fail(const std::string& why);
  int exit_code() const { return verdict == Verdict::Fail ? 1 : 0; }
  std::string text() const;
  nlohmann::json to_json() const;
};

}  // namespace ck
