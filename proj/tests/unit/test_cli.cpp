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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "catch_amalgamated.hpp"
#include "ck/cli/cli.hpp"
#include "ck/cli/report.hpp"
#include "ck/cli/suite.hpp"
#include "json.hpp"

using namespace ck;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& f) { return std::string(CK_DATA_DIR) + "/" + f; }

}  // namespace

TEST_CASE("fakir of powerset passes with the identity table", "[cli]") {
  auto r = run({"fakir", "--monad", "builtin:powerset", "--window", "1..4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict: pass") != std::string::npos);
  CHECK(r.out.find("isomorphic to the identity") != std::string::npos);
  CHECK(r.out.find("window: powerset, set sizes 1..4") != std::string::npos);
}

TEST_CASE("basis check prints the counts table", "[cli]") {
  auto r = run({"basis-check", "--k", "3", "--B", "4", "--format", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["verdict"] == "pass");
  CHECK(j["verb"] == "basis-check --k 3 --B 4");
  REQUIRE(j["tables"].size() == 1);
  CHECK(j["tables"][0]["rows"][3][1] == "250871");
}

TEST_CASE("exit codes", "[cli]") {
  CHECK(run({"suite", "nightly"}).code == 2);
  auto missing = run({"monad-check", "--monad", "/no/such/monad.json"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("cannot open") != std::string::npos);
  CHECK(run({"fakir", "--monad", "powerset", "--window", "3..1"}).code == 2);
  CHECK(run({"fakir", "--monad", "no-such-monad"}).code == 2);
  CHECK(run({"no-such-verb"}).code == 2);
  CHECK(run({"fakir", "--monad", "powerset", "--format", "xml"}).code == 2);
  // A counterexample is a mathematical failure.
  auto outer = run({"lifting-check", "--category", "arrow", "--maxdim", "2"});
  CHECK(outer.code == 1);
  CHECK(outer.out.find("Lambda^2_0") != std::string::npos);
  CHECK(run({"localize", "--category", "discrete:2", "--subcat", "x0"}).code == 1);
  CHECK(run({"initial-check", "--subcat", "[0]"}).code == 1);
  // Bounded evidence is not a failure.
  auto inner = run({"lifting-check", "--category", "arrow", "--class", "inner"});
  CHECK(inner.code == 0);
  CHECK(inner.out.find("verdict: evidence") != std::string::npos);
}

TEST_CASE("reports are byte-identical between runs", "[cli]") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"isar", "--monad", "affine:Z/2", "--window", "0..4", "--format", "json"},
           {"codensity", "--subcat", "1,2,4", "--window", "0..3"},
           {"filtration", "--anodyne", "--maxdim", "2", "--B", "3"},
           {"bk-shadow", "--ring", "Z/2", "--window", "0..4", "--format", "json"}}) {
    auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("out writes text and json", "[cli]") {
  auto base = (std::filesystem::temp_directory_path() / "ck_cli_out").string();
  auto r = run({"bk-shadow", "--ring", "Z/2", "--out", base});
  CHECK(r.code == 0);
  std::ifstream t(base + ".txt"), j(base + ".json");
  REQUIRE(t.good());
  REQUIRE(j.good());
  std::stringstream ts;
  ts << t.rdbuf();
  CHECK(ts.str() == r.out);
  auto doc = nlohmann::json::parse(j);
  CHECK(doc["verdict"] == "pass");
  CHECK(doc["verb"] == "bk-shadow --ring Z/2");
}

TEST_CASE("file inputs", "[cli]") {
  CHECK(run({"localize", "--category", data("chain_abc.json"), "--subcat", "b,c"}).code == 0);
  CHECK(run({"monad-check", "--monad", data("maybe_table.json"), "--window", "0..2"}).code == 0);
  CHECK(run({"monad-check", "--monad", data("writer_z2.json")}).code == 0);
  CHECK(run({"bk-shadow", "--ring", data("ring_z3.json"), "--window", "0..3"}).code == 0);
  CHECK(run({"codensity", "--category", data("endo_two.json"), "--subcat", "two"}).code == 0);
  CHECK(run({"lifting-check", "--input", data("nerve_arrow.json"), "--class", "inner"}).code == 0);
  CHECK(run({"filtration", "--input", data("ndelta_inj_presentation.json")}).code == 0);
}

TEST_CASE("suite names", "[cli]") {
  CHECK(suite_criteria("paper").size() == kCriteria);
  auto q = suite_criteria("quick");
  CHECK(q.size() < static_cast<size_t>(kCriteria));
  CHECK_THROWS_AS(suite_criteria("full"), std::invalid_argument);
}
