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

// Command-line front end over the C interface.
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "superbi/superbi.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::string take(char* s) {
  std::string out = s == nullptr ? "" : s;
  superbi_string_free(s);
  return out;
}

int report_error(const char* context) {
  std::cerr << "superbi: " << context << ": " << superbi_last_error() << "\n";
  return kExitUsage;
}

int run_expr(const std::string& text, const std::optional<std::string>& params, bool json) {
  superbi_expr* e = nullptr;
  if (superbi_expr_parse(text.c_str(), &e) != SUPERBI_OK) return report_error("parse error");
  char* rendered = nullptr;
  superbi_expr_render(e, &rendered);
  const std::string canonical = take(rendered);
  superbi_operator* op = nullptr;
  const superbi_status st = superbi_expr_eval(e, params ? params->c_str() : nullptr, &op);
  superbi_expr_free(e);
  if (st != SUPERBI_OK) return report_error("evaluation error");
  char* normal = nullptr;
  superbi_operator_render(op, &normal);
  const std::string normal_form = take(normal);
  const bool zero = superbi_operator_is_zero(op) != 0;
  const std::size_t terms = superbi_operator_term_count(op);
  superbi_operator_free(op);
  if (json) {
    nlohmann::json out = {{"expr", canonical},
                          {"parameter_mode", params ? *params : "symbolic"},
                          {"normal_form", normal_form},
                          {"terms", terms},
                          {"is_zero", zero}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "expr: " << canonical << "\n"
              << "normal form: " << normal_form << "\n"
              << "zero: " << (zero ? "yes" : "no") << "\n";
  }
  return kExitPass;
}

int run_suite(const std::string& suite, const superbi_suite_options& options, bool json) {
  superbi_report* report = nullptr;
  if (superbi_run_suite(suite.c_str(), &options, &report) != SUPERBI_OK) {
    return report_error("suite error");
  }
  char* text = nullptr;
  superbi_report_format(report, json ? SUPERBI_FORMAT_JSON : SUPERBI_FORMAT_TEXT, &text);
  std::cout << take(text);
  const bool passed = superbi_report_failure_count(report) == 0;
  superbi_report_free(report);
  return passed ? kExitPass : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the superspace Bannai-Ito realization"};
  app.set_version_flag("--version", superbi_version());

  superbi_suite_options options;
  superbi_suite_options_init(&options);

  std::vector<std::string> suites;
  for (std::size_t i = 0; i < superbi_suite_count(); ++i) suites.emplace_back(superbi_suite_name(i));

  std::string suite;
  std::string expr;
  std::string format = "text";
  std::optional<std::string> params;
  std::optional<int> max_n;
  bool list = false;

  auto* suite_opt = app.add_option("--suite", suite, "Verification suite to run")
                        ->check(CLI::IsMember(suites));
  auto* expr_opt = app.add_option("--expr", expr, "Evaluate one operator expression");
  suite_opt->excludes(expr_opt);
  app.add_option("--max-degree", options.max_degree, "Monomial degree bound for the actions suite")
      ->check(CLI::Range(2, 12));
  app.add_option("--max-N", max_n, "Degree bound N for the eigen, tridiag and jacobi suites")
      ->check(CLI::Range(0, 8));
  app.add_option("--params", params, "Bind parameters, e.g. nu1=1/2,nu2=1/3,nu3=1/5");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", options.seed, "Seed for randomized checks")->envname("SUPERBI_SEED");
  app.add_option("--kernel-samples", options.kernel_samples, "Random quadruples in the kernel suite")
      ->check(CLI::PositiveNumber);
  app.add_option("--oracle-pairs", options.oracle_pairs, "Random operator pairs in the oracle suite")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", options.threads, "Worker threads, 0 for all cores");
  app.add_flag("--list-suites", list, "Print the suite names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  if (list) {
    for (const auto& s : suites) std::cout << s << "\n";
    return kExitPass;
  }
  const bool json = format == "json";
  if (!expr_opt->empty()) return run_expr(expr, params, json);
  if (suite_opt->empty()) {
    std::cerr << "superbi: one of --suite or --expr is required\n" << app.help();
    return kExitUsage;
  }
  if (max_n) options.max_n = *max_n;
  if (params) options.params = params->c_str();
  return run_suite(suite, options, json);
}
