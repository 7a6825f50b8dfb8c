// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <sstream>

#include "util.hpp"
#include "veronese/report.hpp"

using namespace veronese;
using namespace veronese::cli;
using nlohmann::ordered_json;

namespace {

Request all_request(VeroneseParams params) {
  Request req;
  req.params = std::move(params);
  req.set_all();
  return req;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("parameter grammar") {
  VeroneseParams p = parse_params("7;4,3,2,1,1");
  CHECK(p.d == 7);
  CHECK(p.caps == std::vector<int>{4, 3, 2, 1, 1});

  VeroneseParams spaced = parse_params(" 5 ; 3 , 2 , 1 ");
  CHECK(spaced.d == 5);
  CHECK(spaced.caps == std::vector<int>{3, 2, 1});

  CHECK_THROWS_WITH_AS(parse_params("5:3,2,1"),
                       "expected ';' at position 1", UsageError);
  CHECK_THROWS_WITH_AS(parse_params("5;3,,1"),
                       "expected a nonnegative integer at position 4",
                       UsageError);
  CHECK_THROWS_WITH_AS(parse_params("5;3,2,1 junk"),
                       "unexpected trailing input at position 8", UsageError);
  CHECK_THROWS_AS(parse_params(""), UsageError);
  CHECK_THROWS_AS(parse_params("5;3,-2"), UsageError);
  CHECK_THROWS_AS(parse_params("5000000;1"), UsageError);
}

TEST_CASE("a request needs an input and an action") {
  Request empty;
  CHECK_THROWS_AS(run(empty), UsageError);
  Request no_action;
  no_action.params = VeroneseParams{5, {3, 2, 1}};
  CHECK_THROWS_AS(run(no_action), UsageError);
}

TEST_CASE("full run on the canonical parameters") {
  Request req = all_request({5, {3, 2, 1}});
  req.oracle_check = true;
  RunResult rr = run(req);
  CHECK(rr.exit_code == 0);
  CHECK(rr.discrepancies.empty());

  const ordered_json& j = rr.report;
  CHECK(j["schema"] == 1);
  CHECK(j["input"]["d"] == 5);
  CHECK(j["input"]["a"] == std::vector<int>{3, 2, 1});
  CHECK(j["radical"] == ordered_json::array({{1, 2}}));
  CHECK(j["borel"] == ordered_json::array({{1, 2}}));
  CHECK(j["m"] == 2);
  CHECK(j["b"] == 2);
  CHECK(j["equidimensional"]["verdict"] == true);
  CHECK(j["equidimensional"]["cover_cardinality"] == 1);
  CHECK(j["maximal_pair"]["p"] == 2);
  CHECK(j["maximal_pair"]["l"] == 2);
  CHECK(j["associated_primes"].size() == 5);
  CHECK(j["witnesses_verified"] == true);
  CHECK(j["unmixed"] == false);
  CHECK(j["class"] == "NotCohenMacaulay");
  CHECK(j["oracle"]["checked"] == true);
  CHECK(j["oracle"]["agreed"] == true);
}

TEST_CASE("structured report round-trips through serialization") {
  Request req = all_request({7, {4, 3, 2, 1, 1}});
  RunResult rr = run(req);
  ordered_json reparsed = ordered_json::parse(rr.report.dump());
  CHECK(reparsed == rr.report);
}

TEST_CASE("text and structured output agree on verdicts and counts") {
  Request req = all_request({5, {3, 2, 1}});
  RunResult rr = run(req);
  CHECK(rr.text.find("equidimensional: yes") != std::string::npos);
  CHECK(rr.text.find("unmixed: no") != std::string::npos);
  CHECK(rr.text.find("class: NotCohenMacaulay") != std::string::npos);
  CHECK(rr.text.find("associated primes (5)") != std::string::npos);
  CHECK(rr.report["associated_primes"].size() == 5);
}

TEST_CASE("the corruption hook flips the oracle verdict") {
  Request req = all_request({5, {3, 2, 1}});
  req.oracle_check = true;
  req.corrupt = true;
  RunResult rr = run(req);
  CHECK(rr.exit_code == 2);
  CHECK_FALSE(rr.discrepancies.empty());
  CHECK(rr.report["oracle"]["agreed"] == false);
}

TEST_CASE("base-set requests delegate after translation") {
  Request req;
  req.bases = BaseSet({{2, 1, 1}, {1, 2, 1}, {1, 1, 2}});
  req.set_all();
  req.oracle_check = true;
  RunResult rr = run(req);
  CHECK(rr.exit_code == 0);
  CHECK(rr.report["exchange"] == true);
  CHECK(rr.report["strong_exchange"] == true);
  CHECK(rr.report["translation"]["shift"] == std::vector<int>{1, 1, 1});
  CHECK(rr.report["radical"] == ordered_json::array({{1, 2, 3}}));
  CHECK(rr.report["equidimensional"]["verdict"] == true);

  // In Veronese position the whole pipeline runs.
  Request direct;
  direct.bases = BaseSet({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
  direct.set_all();
  RunResult rd = run(direct);
  CHECK(rd.report["translation"]["shift"] == std::vector<int>{0, 0, 0});
  CHECK(rd.report["class"] == "SquarefreeVeronese");
  CHECK(rd.report["unmixed"] == true);
}

TEST_CASE("exchange failures block ideal-level analyses") {
  Request req;
  req.bases = BaseSet({{2, 0}, {0, 2}});
  req.radical = true;
  CHECK_THROWS_AS(run(req), DomainError);

  req.set_all();  // --all skips instead
  RunResult rr = run(req);
  CHECK(rr.exit_code == 0);
  CHECK(rr.report["exchange"] == false);
}

TEST_CASE("driver exit codes") {
  std::ostringstream out, err;
  CHECK(run_cli({"5;3,2,1", "--all"}, out, err) == 0);
  CHECK(run_cli({"3;1,1", "--classify"}, out, err) == 1);
  CHECK(run_cli({"5;3,2,1"}, out, err) == 1);  // no action
  CHECK(run_cli({"5;3,2,1", "--all", "--oracle", "--corrupt"}, out, err) == 2);
  CHECK(run_cli({"--badflag"}, out, err) == 1);
}

TEST_CASE("json mode emits parseable output") {
  std::ostringstream out, err;
  REQUIRE(run_cli({"2;1,1,1,1", "--classify", "--json"}, out, err) == 0);
  ordered_json j = ordered_json::parse(out.str());
  CHECK(j["class"] == "SquarefreeVeronese");
}

TEST_SUITE_END();
