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

// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "superbi/eigenbasis.hpp"
#include "superbi/expression.hpp"
#include "superbi/suites.hpp"

using namespace superbi;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

std::string first_failure(const VerificationReport& r) {
  for (const auto& c : r.checks())
    if (c.status == CheckStatus::fail) return r.suite() + ":" + c.id + ": " + c.residual;
  return {};
}

void require_all(Outcome& out, const VerificationReport& r) {
  out.require(!r.checks().empty(), r.suite() + " produced no checks");
  out.require(r.all_passed(), first_failure(r));
}

void require_ids(Outcome& out, const VerificationReport& r, const std::vector<std::string>& ids) {
  for (const auto& id : ids) {
    const CheckResult* c = r.find(id);
    out.require(c != nullptr, r.suite() + " lacks check " + id);
    if (c) out.require(c->status == CheckStatus::pass, r.suite() + ":" + id + ": " + c->residual);
  }
}

std::size_t count_prefix(const VerificationReport& r, const std::string& prefix) {
  std::size_t n = 0;
  for (const auto& c : r.checks()) n += c.id.rfind(prefix, 0) == 0;
  return n;
}

void require_zero_expr(Outcome& out, const std::string& text) {
  try {
    const OperatorElement op = eval_expr(parse_expr(text));
    out.require(op.is_zero(), "'" + text + "' = " + op.to_string());
  } catch (const std::exception& e) {
    out.require(false, "'" + text + "': " + e.what());
  }
}

SuiteOptions base_options() {
  SuiteOptions o;
  o.max_degree = 8;
  o.kernel_samples = 50;
  o.oracle_pairs = 200;
  return o;
}

// Suite name and max_N for criteria 1 to 8.
const std::vector<std::pair<std::string, std::optional<int>>> kSuites = {
    {"osp", std::nullopt},   {"bannai-ito", std::nullopt}, {"kernel", std::nullopt},
    {"actions", std::nullopt}, {"eigen", 6},                {"tridiag", 5},
    {"jacobi", 6},           {"oracle", std::nullopt}};

VerificationReport run(const std::string& name, std::optional<int> max_n,
                       const std::optional<ParamPoint>& point = std::nullopt) {
  SuiteOptions o = base_options();
  o.max_n = max_n;
  o.params = point;
  return run_suite(name, o);
}

std::map<std::string, VerificationReport> symbolic;

Outcome criterion1() {
  Outcome out;
  const auto& r = symbolic.at("osp");
  require_all(out, r);
  std::vector<std::string> ids;
  for (int j = 1; j <= 3; ++j)
    for (const char* c : {"comm_A0_Apm", "anticomm_Ap_Am", "Am_squared", "P_involution", "P_A0",
                          "P_Apm", "Q_central", "Q_scalar"})
      ids.push_back("copy" + std::to_string(j) + "." + c);
  require_ids(out, r, ids);
  out.require(count_prefix(r, "copy") == 24, "expected 24 single-copy checks");
  out.require(count_prefix(r, "pair") == 12, "expected 12 cross-copy checks");
  for (const char* text :
       {"[A0(1), A+(1)] - A+(1)", "[A0(2), A-(2)] + A-(2)", "{A+(3), A-(3)} - A0(3)",
        "A-(1)^2 - dx1", "P(2)^2 - 1", "[P(3), A0(3)]", "{P(1), A+(1)}", "{P(2), A-(2)}",
        "Q(3) - 2*nu3 + 1/2", "[Q(12), A+(12)]", "[A0(1), A-(3)]", "{A+(1), A-(2)}",
        "{A-(2), A-(3)}"})
    require_zero_expr(out, text);
  out.detail = out.pass ? std::to_string(r.checks().size()) + " checks, 13 DSL identities" : out.detail;
  return out;
}

Outcome criterion2() {
  Outcome out;
  const auto& r = symbolic.at("bannai-ito");
  require_all(out, r);
  out.require(r.checks().size() == 4, "expected 4 checks");
  require_zero_expr(out, "{Q(12),Q(23)} - Q(13) - 2*Q(1)*Q(3) - 2*Q(2)*Q(123)");
  require_zero_expr(out, "{Q(13),Q(23)} - Q(12) - 2*Q(1)*Q(2) - 2*Q(3)*Q(123)");
  if (out.pass) out.detail = "4 checks, 2 DSL identities";
  return out;
}

Outcome criterion3() {
  Outcome out;
  const auto& r = symbolic.at("kernel");
  require_all(out, r);
  const std::size_t trips = count_prefix(r, "roundtrip.");
  out.require(trips >= 50, "only " + std::to_string(trips) + " round trips");
  require_ids(out, r, {"decompose.theta1_rejected"});
  if (out.pass) out.detail = std::to_string(trips) + " round trips of degree <= 6";
  return out;
}

Outcome criterion4() {
  Outcome out;
  const auto& r = symbolic.at("actions");
  require_all(out, r);
  std::vector<std::string> ids;
  for (const char* q : {"Q12", "Q13", "Q23"})
    for (const char* k : {"O1", "O2", "E1", "E2"}) ids.push_back(std::string(q) + "." + k);
  require_ids(out, r, ids);
  out.require(r.checks().size() == 12, "expected 12 identities");
  if (out.pass) out.detail = "12 identities on all u^a v^b with a+b <= 8";
  return out;
}

Outcome criterion5() {
  Outcome out;
  const auto& r = symbolic.at("eigen");
  require_all(out, r);
  std::vector<std::string> ids;
  std::size_t labels = 0;
  for (int n = 0; n <= 6; ++n)
    for (Subspace s : {Subspace::odd, Subspace::even}) {
      ids.push_back("rank." + to_string(s) + ".N" + std::to_string(n));
      for (const auto& l : basis_labels(s, n)) {
        const std::string id = to_string(s) + to_string(l.sign) + ".N" +
                               std::to_string(n) + ".k" + std::to_string(l.k);
        ids.push_back(id + ".Q123");
        ids.push_back(id + ".Q12");
        ++labels;
      }
    }
  require_ids(out, r, ids);
  out.require(labels == 56 + 49, "unexpected label count");
  if (out.pass) out.detail = std::to_string(labels) + " eigenvectors, 14 ranks, N <= 6";
  return out;
}

Outcome criterion6() {
  Outcome out;
  const auto& r = symbolic.at("tridiag");
  require_all(out, r);
  std::vector<std::string> ids;
  for (int n = 0; n <= 5; ++n)
    for (Subspace s : {Subspace::odd, Subspace::even}) {
      ids.push_back(to_string(s) + ".N" + std::to_string(n) + ".trace");
      for (const auto& l : basis_labels(s, n))
        ids.push_back(to_string(s) + ".N" + std::to_string(n) + ".k" + std::to_string(l.k) +
                      (l.sign == Sign::plus ? ".plus" : ".minus") + ".support");
    }
  require_ids(out, r, ids);
  std::size_t products = 0;
  for (const auto& c : r.checks()) products += c.id.find(".product_") != std::string::npos;
  out.require(products > 0, "no product checks");
  if (out.pass)
    out.detail = std::to_string(r.checks().size()) + " checks, " + std::to_string(products) +
                 " products, N <= 5";
  return out;
}

Outcome criterion7() {
  Outcome out;
  const auto& r = symbolic.at("jacobi");
  require_all(out, r);
  std::vector<std::string> ids;
  for (int k = 0; k <= 6; ++k) {
    ids.push_back("contiguity_alpha.k" + std::to_string(k));
    ids.push_back("contiguity_beta.k" + std::to_string(k));
    ids.push_back("ode_odd.N6.k" + std::to_string(k));
  }
  require_ids(out, r, ids);
  out.require(count_prefix(r, "ode_even.") > 0, "no even ODE checks");
  if (out.pass) out.detail = std::to_string(r.checks().size()) + " checks, k <= 6";
  return out;
}

Outcome criterion8() {
  Outcome out;
  const auto& r = symbolic.at("oracle");
  require_all(out, r);
  out.require(r.checks().size() >= 200, "fewer than 200 pairs");
  SuiteOptions o = base_options();
  o.threads = 1;
  const VerificationReport again = run_suite("oracle", o);
  bool same = again.checks().size() == r.checks().size();
  for (std::size_t i = 0; same && i < r.checks().size(); ++i)
    same = r.checks()[i].id == again.checks()[i].id &&
           r.checks()[i].status == again.checks()[i].status &&
           r.checks()[i].residual == again.checks()[i].residual;
  out.require(same, "rerun with the same seed differs");
  if (out.pass) out.detail = std::to_string(r.checks().size()) + " pairs, reproducible";
  return out;
}

Outcome criterion9() {
  Outcome out;
  std::set<std::string> points;
  std::size_t total = 0;
  for (std::uint64_t i = 0; i < 3; ++i) {
    const ParamPoint p = generic_point(base_options().seed + i, 8);
    const std::string mode = Params::at(p).describe();
    out.require(points.insert(mode).second, "repeated point " + mode);
    for (const auto& [name, max_n] : kSuites) {
      const VerificationReport r = run(name, max_n, p);
      out.require(r.parameter_mode() == mode, name + " ran in mode " + r.parameter_mode());
      require_all(out, r);
      std::set<std::string> ids;
      for (const auto& c : r.checks()) ids.insert(c.id);
      std::set<std::string> expected;
      for (const auto& c : symbolic.at(name).checks()) expected.insert(c.id);
      out.require(ids == expected, name + " at " + mode + " runs different checks");
      total += r.checks().size();
    }
    const VerificationReport agree = check_evaluation_agreement(p, 5);
    require_all(out, agree);
    total += agree.checks().size();
  }
  if (out.pass) out.detail = std::to_string(total) + " checks at 3 generic points";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria = {
      criterion1, criterion2, criterion3, criterion4, criterion5,
      criterion6, criterion7, criterion8, criterion9};

  const auto start = std::chrono::steady_clock::now();
  std::map<std::string, double> seconds;
  for (const auto& [name, max_n] : kSuites) {
    const auto t0 = std::chrono::steady_clock::now();
    symbolic.emplace(name, run(name, max_n));
    seconds[name] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }

  const char* suite_of[] = {"osp", "bannai-ito", "kernel", "actions", "eigen", "tridiag", "jacobi",
                            "oracle", nullptr};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("error: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (suite_of[i]) secs += seconds[suite_of[i]];
    std::printf("criterion %zu: %s  %s (%.2f s)\n", i + 1, o.pass ? "PASS" : "FAIL",
                o.detail.c_str(), secs);
    failed += !o.pass;
  }
  const double total =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/9 criteria passed in %.1f s\n", 9 - failed, total);
  return failed == 0 ? 0 : 1;
}
