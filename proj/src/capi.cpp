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

#include "superbi/superbi.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "superbi/errors.hpp"
#include "superbi/expression.hpp"
#include "superbi/suites.hpp"

struct superbi_expr {
  superbi::Expr ast;
};

struct superbi_operator {
  superbi::OperatorElement op;
};

struct superbi_report {
  superbi::VerificationReport report;
};

namespace {

struct LastError {
  std::string message;
  std::size_t line = 0;
  std::size_t column = 0;
};

thread_local LastError last_error;

superbi_status fail(superbi_status status, std::string message) {
  last_error = {std::move(message), 0, 0};
  return status;
}

template <typename Body>
superbi_status guarded(Body&& body) {
  last_error = {};
  try {
    body();
    return SUPERBI_OK;
  } catch (const superbi::ParseError& e) {
    last_error = {e.what(), e.line(), e.column()};
    return SUPERBI_ERR_PARSE;
  } catch (const superbi::VanishingDenominator& e) {
    return fail(SUPERBI_ERR_VANISHING_DENOMINATOR, e.what());
  } catch (const superbi::DivisionByZero& e) {
    return fail(SUPERBI_ERR_DIVISION_BY_ZERO, e.what());
  } catch (const superbi::SingularSystem& e) {
    return fail(SUPERBI_ERR_SINGULAR_SYSTEM, e.what());
  } catch (const superbi::InvalidArgument& e) {
    return fail(SUPERBI_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(SUPERBI_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SUPERBI_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::optional<superbi::ParamPoint> point_from(const char* params) {
  if (params == nullptr || *params == '\0') return std::nullopt;
  return superbi::parse_param_point(params);
}

}  // namespace

extern "C" {

const char* superbi_version(void) { return "1.0.0"; }
const char* superbi_last_error(void) { return last_error.message.c_str(); }
size_t superbi_last_error_line(void) { return last_error.line; }
size_t superbi_last_error_column(void) { return last_error.column; }
void superbi_string_free(char* s) { std::free(s); }

superbi_status superbi_expr_parse(const char* text, superbi_expr** out) {
  if (text == nullptr || out == nullptr) return fail(SUPERBI_ERR_NULL_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new superbi_expr{superbi::parse_expr(text)}; });
}

superbi_status superbi_expr_render(const superbi_expr* e, char** out) {
  if (e == nullptr || out == nullptr) return fail(SUPERBI_ERR_NULL_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = copy_string(superbi::render_expr(e->ast)); });
}

void superbi_expr_free(superbi_expr* e) { delete e; }

superbi_status superbi_expr_eval(const superbi_expr* e, const char* params,
                                 superbi_operator** out) {
  if (e == nullptr || out == nullptr) return fail(SUPERBI_ERR_NULL_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new superbi_operator{superbi::eval_expr(e->ast, point_from(params))}; });
}

superbi_status superbi_operator_render(const superbi_operator* op, char** out) {
  if (op == nullptr || out == nullptr) return fail(SUPERBI_ERR_NULL_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = copy_string(op->op.to_string()); });
}

int superbi_operator_is_zero(const superbi_operator* op) {
  return op != nullptr && op->op.is_zero() ? 1 : 0;
}

size_t superbi_operator_term_count(const superbi_operator* op) {
  return op == nullptr ? 0 : op->op.term_count();
}

void superbi_operator_free(superbi_operator* op) { delete op; }

size_t superbi_suite_count(void) { return superbi::suite_names().size(); }

const char* superbi_suite_name(size_t index) {
  const auto& names = superbi::suite_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

void superbi_suite_options_init(superbi_suite_options* options) {
  if (options == nullptr) return;
  const superbi::SuiteOptions d;
  options->max_degree = d.max_degree;
  options->max_n = -1;
  options->params = nullptr;
  options->seed = d.seed;
  options->kernel_samples = d.kernel_samples;
  options->oracle_pairs = d.oracle_pairs;
  options->threads = d.threads;
}

superbi_status superbi_run_suite(const char* name, const superbi_suite_options* options,
                                 superbi_report** out) {
  if (name == nullptr || out == nullptr) return fail(SUPERBI_ERR_NULL_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    superbi_suite_options c;
    superbi_suite_options_init(&c);
    if (options != nullptr) c = *options;
    superbi::SuiteOptions o;
    o.max_degree = c.max_degree;
    if (c.max_n >= 0 || c.max_n < -1) o.max_n = c.max_n;
    o.params = point_from(c.params);
    o.seed = c.seed;
    o.kernel_samples = c.kernel_samples;
    o.oracle_pairs = c.oracle_pairs;
    o.threads = c.threads;
    *out = new superbi_report{superbi::run_suite(name, o)};
  });
}

const char* superbi_report_suite(const superbi_report* r) {
  return r == nullptr ? nullptr : r->report.suite().c_str();
}

const char* superbi_report_parameter_mode(const superbi_report* r) {
  return r == nullptr ? nullptr : r->report.parameter_mode().c_str();
}

size_t superbi_report_check_count(const superbi_report* r) {
  return r == nullptr ? 0 : r->report.checks().size();
}

size_t superbi_report_failure_count(const superbi_report* r) {
  return r == nullptr ? 0 : r->report.failure_count();
}

superbi_status superbi_report_check(const superbi_report* r, size_t index,
                                    superbi_check_info* info) {
  if (r == nullptr || info == nullptr) return fail(SUPERBI_ERR_NULL_ARGUMENT, "null argument");
  if (index >= r->report.checks().size()) return fail(SUPERBI_ERR_OUT_OF_RANGE, "check index out of range");
  const superbi::CheckResult& c = r->report.checks()[index];
  info->id = c.id.c_str();
  info->anchor = c.anchor.c_str();
  info->passed = c.status == superbi::CheckStatus::pass ? 1 : 0;
  info->residual_terms = c.residual_terms;
  info->residual = c.residual.c_str();
  info->micros = c.micros;
  return SUPERBI_OK;
}

superbi_status superbi_report_format(const superbi_report* r, superbi_format format, char** out) {
  if (r == nullptr || out == nullptr) return fail(SUPERBI_ERR_NULL_ARGUMENT, "null argument");
  *out = nullptr;
  if (format != SUPERBI_FORMAT_TEXT && format != SUPERBI_FORMAT_JSON) {
    return fail(SUPERBI_ERR_INVALID_ARGUMENT, "unknown report format");
  }
  return guarded([&] {
    *out = copy_string(format == SUPERBI_FORMAT_TEXT ? r->report.to_text()
                                                     : r->report.to_json_lines());
  });
}

void superbi_report_free(superbi_report* r) { delete r; }

}  // extern "C"
