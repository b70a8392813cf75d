/*
 * Copyright 2026 The superbi Authors
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

/* C interface to the superbi engine. All handles are opaque. Functions
 * return a superbi_status; on failure superbi_last_error() describes the
 * error for the calling thread until its next call into the library, and
 * any handle or string out-parameter is set to NULL. */
#ifndef SUPERBI_SUPERBI_H
#define SUPERBI_SUPERBI_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SUPERBI_API __declspec(dllexport)
#else
#define SUPERBI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum superbi_status {
  SUPERBI_OK = 0,
  SUPERBI_ERR_NULL_ARGUMENT = 1,
  SUPERBI_ERR_PARSE = 2,
  SUPERBI_ERR_INVALID_ARGUMENT = 3,
  SUPERBI_ERR_VANISHING_DENOMINATOR = 4,
  SUPERBI_ERR_DIVISION_BY_ZERO = 5,
  SUPERBI_ERR_SINGULAR_SYSTEM = 6,
  SUPERBI_ERR_INTERNAL = 7,
  SUPERBI_ERR_OUT_OF_RANGE = 8
} superbi_status;

typedef enum superbi_format { SUPERBI_FORMAT_TEXT = 0, SUPERBI_FORMAT_JSON = 1 } superbi_format;

typedef struct superbi_expr superbi_expr;
typedef struct superbi_operator superbi_operator;
typedef struct superbi_report superbi_report;

typedef struct superbi_suite_options {
  int max_degree;          /* actions suite, 2..12 */
  int max_n;               /* -1 selects the suite default; otherwise 0..8 */
  const char* params;      /* "nu1=r,nu2=r,nu3=r" or NULL for symbolic */
  uint64_t seed;
  int kernel_samples;
  int oracle_pairs;
  unsigned threads;        /* 0 selects the hardware concurrency */
} superbi_suite_options;

typedef struct superbi_check_info {
  const char* id;
  const char* anchor;
  int passed;
  size_t residual_terms;
  const char* residual;    /* empty when passed */
  int64_t micros;
} superbi_check_info;

SUPERBI_API const char* superbi_version(void);
SUPERBI_API const char* superbi_last_error(void);
/* Line and column of the last parse error, 0 if none. */
SUPERBI_API size_t superbi_last_error_line(void);
SUPERBI_API size_t superbi_last_error_column(void);
SUPERBI_API void superbi_string_free(char* s);

SUPERBI_API superbi_status superbi_expr_parse(const char* text, superbi_expr** out);
SUPERBI_API superbi_status superbi_expr_render(const superbi_expr* e, char** out);
SUPERBI_API void superbi_expr_free(superbi_expr* e);

/* params may be NULL (symbolic) or "nu1=r,nu2=r,nu3=r". */
SUPERBI_API superbi_status superbi_expr_eval(const superbi_expr* e, const char* params,
                                             superbi_operator** out);
SUPERBI_API superbi_status superbi_operator_render(const superbi_operator* op, char** out);
SUPERBI_API int superbi_operator_is_zero(const superbi_operator* op);
SUPERBI_API size_t superbi_operator_term_count(const superbi_operator* op);
SUPERBI_API void superbi_operator_free(superbi_operator* op);

SUPERBI_API size_t superbi_suite_count(void);
SUPERBI_API const char* superbi_suite_name(size_t index);
SUPERBI_API void superbi_suite_options_init(superbi_suite_options* options);
/* options may be NULL for the defaults. */
SUPERBI_API superbi_status superbi_run_suite(const char* name,
                                             const superbi_suite_options* options,
                                             superbi_report** out);

SUPERBI_API const char* superbi_report_suite(const superbi_report* r);
SUPERBI_API const char* superbi_report_parameter_mode(const superbi_report* r);
SUPERBI_API size_t superbi_report_check_count(const superbi_report* r);
SUPERBI_API size_t superbi_report_failure_count(const superbi_report* r);
/* Strings in info stay valid until the report is freed. */
SUPERBI_API superbi_status superbi_report_check(const superbi_report* r, size_t index,
                                                superbi_check_info* info);
SUPERBI_API superbi_status superbi_report_format(const superbi_report* r, superbi_format format,
                                                 char** out);
SUPERBI_API void superbi_report_free(superbi_report* r);

#ifdef __cplusplus
}
#endif

#endif /* SUPERBI_SUPERBI_H */
