// Copyright 2026 The superbi Authors
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

#include <set>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "superbi/errors.hpp"
#include "superbi/report.hpp"
#include "superbi/suites.hpp"

using namespace superbi;

TEST_SUITE("cli-harness") {

TEST_CASE("report bookkeeping") {
  VerificationReport r("demo", "symbolic");
  r.run("b", "x = x", [] { return std::pair<std::size_t, std::string>{0, ""}; });
  r.run("a", "y = 0", [] { return std::pair<std::size_t, std::string>{2, "t1 + t2"}; });
  CHECK_THROWS_AS(r.add({"a", "dup", CheckStatus::pass, 0, "", 0}), InvalidArgument);
  CHECK_THROWS_AS(r.add({"c", "bad", CheckStatus::fail, 1, "", 0}), InvalidArgument);
  r.sort();
  CHECK(r.checks()[0].id == "a");
  CHECK(r.failure_count() == 1);
  CHECK_FALSE(r.all_passed());
  CHECK(r.find("a")->residual == "t1 + t2");

  VerificationReport all("all", "symbolic");
  all.merge_prefixed(r);
  CHECK(all.find("demo/b") != nullptr);

  std::istringstream lines(r.to_json_lines());
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j.at("suite") == "demo");
    CHECK(j.contains("check_id"));
    CHECK(j.contains("anchor"));
    CHECK((j.at("status") == "pass" || j.at("status") == "fail"));
    CHECK(j.at("residual_terms").is_number_unsigned());
    CHECK(j.at("micros").is_number_integer());
    ++count;
  }
  CHECK(count == 2);
  CHECK(r.to_text().find("FAIL") != std::string::npos);
  CHECK(summarize_residual(std::string(1000, 'x'), 20).size() <= 40);
}

TEST_CASE("suite names and option validation") {
  const auto& names = suite_names();
  CHECK(names.size() == 10);
  CHECK(names.back() == "all");
  SuiteOptions o;
  CHECK_THROWS_AS(run_suite("nope", o), InvalidArgument);
  o.max_degree = 13;
  CHECK_THROWS_AS(run_suite("actions", o), InvalidArgument);
  o.max_degree = 8;
  o.max_n = 9;
  CHECK_THROWS_AS(run_suite("eigen", o), InvalidArgument);
  o.max_n = 2;
  o.oracle_pairs = 0;
  CHECK_THROWS_AS(run_suite("oracle", o), InvalidArgument);
}

TEST_CASE("small suites pass with sorted unique ids") {
  SuiteOptions o;
  o.max_degree = 3;
  o.max_n = 1;
  o.kernel_samples = 5;
  o.oracle_pairs = 10;
  for (const std::string name : {"osp", "bannai-ito", "kernel", "actions", "eigen", "tridiag",
                                 "jacobi", "oracle"}) {
    const auto r = run_suite(name, o);
    INFO(name);
    CHECK(r.suite() == name);
    CHECK(r.parameter_mode() == "symbolic");
    CHECK(r.all_passed());
    std::set<std::string> ids;
    for (const auto& c : r.checks()) ids.insert(c.id);
    CHECK(ids.size() == r.checks().size());
    CHECK(std::is_sorted(r.checks().begin(), r.checks().end(),
                         [](const auto& a, const auto& b) { return a.id < b.id; }));
  }
}

TEST_CASE("seeded suites are reproducible and thread independent") {
  SuiteOptions o;
  o.oracle_pairs = 25;
  o.threads = 1;
  const auto a = run_suite("oracle", o);
  o.threads = 4;
  const auto b = run_suite("oracle", o);
  REQUIRE(a.checks().size() == b.checks().size());
  for (std::size_t i = 0; i < a.checks().size(); ++i) {
    CHECK(a.checks()[i].id == b.checks()[i].id);
    CHECK(a.checks()[i].status == b.checks()[i].status);
  }
  std::mt19937_64 r1(9);
  std::mt19937_64 r2(9);
  const Params sym = Params::symbolic();
  CHECK(random_operator(r1, sym) == random_operator(r2, sym));
  CHECK(random_element(r1, sym) == random_element(r2, sym));
}

TEST_CASE("evaluated mode") {
  SuiteOptions o;
  o.params = generic_point(3, 2);
  const auto r = run_suite("bannai-ito", o);
  CHECK(r.parameter_mode().rfind("nu1=", 0) == 0);
  CHECK(r.all_passed());
  for (const auto& locus : degeneracy_loci(2)) CHECK_FALSE(locus.evaluate(*o.params).is_zero());
  CHECK(check_evaluation_agreement(*o.params, 1).all_passed());
}

}
