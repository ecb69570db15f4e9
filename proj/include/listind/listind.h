/* Copyright 2026 The listind Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

/* C interface to liblistind.
 *
 * Every function returns an li_status. On failure li_last_error() describes
 * the problem; the message stays valid until the next call on the same
 * thread. Strings returned through char** are owned by the caller and must
 * be released with li_string_free.
 */

#ifndef LISTIND_LISTIND_H_
#define LISTIND_LISTIND_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LI_API __declspec(dllexport)
#else
#define LI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  LI_OK = 0,
  LI_ERR_ARGUMENT = 1, /* null pointer, bad selector, bad name */
  LI_ERR_PARSE = 2,    /* formula, assignment, list or ordinal syntax */
  LI_ERR_SORT = 3,
  LI_ERR_DOMAIN = 4,   /* ordinal subtraction, overflow, value outside the model */
  LI_ERR_EVAL = 5,
  LI_ERR_IO = 6,
  LI_ERR_INTERNAL = 7
} li_status;

typedef struct li_model li_model;
typedef struct li_report li_report;

typedef struct {
  uint64_t seed;
  uint64_t budget;  /* random assignments per universal check */
  uint64_t bound;   /* enumeration bound */
  uint64_t samples; /* axiom and certificate samples */
} li_options;

LI_API const char* li_last_error(void);
LI_API const char* li_status_name(li_status status);
LI_API void li_string_free(char* s);

/* seed 0, budget 200, bound 3, samples 10000. */
LI_API void li_options_default(li_options* options);

/* "m1:<m>" with m >= 1, or "m2". */
LI_API li_status li_model_create(const char* selector, li_model** out);
LI_API void li_model_destroy(li_model* model);
LI_API li_status li_model_name(const li_model* model, char** out);

/* Canonical form of an ordinal expression; divmod yields "(q, r)". */
LI_API li_status li_ordinal_eval(const char* expression, char** out);

/* Canonical literal of a list literal. */
LI_API li_status li_list_normalize(const char* literal, char** out);

/* Truth value (0 or 1) of an open formula under "X=...; x=..." . */
LI_API li_status li_eval(const li_model* model, const char* formula, const char* assignment,
                         int* out);

/* Every axiom applicable to the model, options->samples draws each. */
LI_API li_status li_check_axioms(const li_model* model, const li_options* options,
                                 li_report** out);

/* m-step induction on variable var (NULL for "X") for an open formula. */
LI_API li_status li_check_induction(const li_model* model, const char* formula, const char* var,
                                    uint64_t m, const li_options* options, li_report** out);

/* "big-step" (needs model m1:m with m >= 2), "right-cancellation" or
 * "right-decomposition" (model m2). */
LI_API li_status li_certificate(const li_model* model, const char* name,
                                const li_options* options, li_report** out);

LI_API li_status li_report_json(const li_report* report, char** out);
LI_API li_status li_report_text(const li_report* report, char** out);
/* 1 when the report shows the verdict the models predict, 0 otherwise. */
LI_API li_status li_report_expected(const li_report* report, int* out);
/* Induction reports only: 1 when the instance is falsified. */
LI_API li_status li_report_instance_falsified(const li_report* report, int* out);
LI_API void li_report_destroy(li_report* report);

/* format "smtlib2" or "tptp"; writes one file per m into out_dir and returns
 * the newline-separated paths. */
LI_API li_status li_emit_benchmarks(const char* format, const uint64_t* ms, size_t count,
                                    const char* out_dir, char** out_paths);

#ifdef __cplusplus
}
#endif

#endif /* LISTIND_LISTIND_H_ */
