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

#include "ck/cli/report.hpp"

#include <algorithm>
#include <sstream>

namespace ck {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Evidence: return "evidence";
  }
  return "?";
}

void Report::fail(const std::string& why) {
  verdict = Verdict::Fail;
  counterexamples.push_back(why);
}

namespace {

void render_table(std::ostringstream& os, const ReportTable& t) {
  std::vector<size_t> width(t.header.size(), 0);
  for (size_t c = 0; c < t.header.size(); ++c) width[c] = t.header[c].size();
  for (const auto& row : t.rows)
    for (size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (size_t c = 0; c < cells.size(); ++c) {
      std::string cell = cells[c];
      if (c + 1 < cells.size()) cell.resize(std::max(width[c], cell.size()), ' ');
      s += "  " + cell;
    }
    os << s << "\n";
  };
  os << "\n" << t.title << "\n";
  line(t.header);
  for (const auto& row : t.rows) line(row);
}

}  // namespace

std::string Report::text() const {
  std::ostringstream os;
  os << "ck report, schema " << kReportSchema << "\n";
  os << "verb: " << verb << "\n";
  os << "window: " << stamp << "\n";
  os << "verdict: " << verdict_name(verdict) << "\n";
  if (!anchor.empty()) os << "anchor: \"" << anchor << "\"\n";
  for (const auto& n : notes) os << "note: " << n << "\n";
  for (const auto& t : tables) render_table(os, t);
  os << "\ncounterexamples:";
  if (counterexamples.empty()) os << " none";
  os << "\n";
  for (const auto& c : counterexamples) os << "  " << c << "\n";
  return os.str();
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["verb"] = verb;
  j["window"] = stamp;
  j["verdict"] = verdict_name(verdict);
  j["anchor"] = anchor;
  j["notes"] = notes;
  j["tables"] = nlohmann::json::array();
  for (const auto& t : tables)
    j["tables"].push_back({{"title", t.title}, {"header", t.header}, {"rows", t.rows}});
  j["counterexamples"] = counterexamples;
  if (!data.is_null()) j["data"] = data;
  return j;
}

}  // namespace ck
