/*
 * Copyright 2026 The fusionkit Authors
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

/* C interface to fusionkit. Every call returns an fk_status; reports are
 * returned as heap strings released with fk_string_free. After a failing
 * call, fk_last_error() describes the failure on the calling thread. */

#ifndef FUSIONKIT_H
#define FUSIONKIT_H

#include <stddef.h>

#if defined(FUSIONKIT_BUILDING)
#define FK_API __attribute__((visibility("default")))
#else
#define FK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fk_status {
  FK_OK = 0,
  FK_CHECK_FAILED = 1, /* a mathematical check failed; the report says which */
  FK_INPUT_ERROR = 2,  /* malformed input, bad option or exceeded cap */
  FK_INTERNAL_ERROR = 3
} fk_status;

typedef enum fk_format { FK_FORMAT_TEXT = 0, FK_FORMAT_JSON = 1 } fk_format;
typedef enum fk_collection { FK_CENTRIC_RADICAL = 0, FK_CENTRIC = 1 } fk_collection;
typedef enum fk_variant { FK_VARIANT_QUOTIENT = 0, FK_VARIANT_ORIGINAL = 1 } fk_variant;
typedef enum fk_centralizer_mode {
  FK_CENTRALIZER_AUTO = 0,
  FK_CENTRALIZER_FULL = 1,
  FK_CENTRALIZER_COORDINATEWISE = 2
} fk_centralizer_mode;

typedef struct fk_group fk_group;
typedef struct fk_options fk_options;

FK_API const char* fk_version(void);
FK_API const char* fk_last_error(void);
FK_API void fk_string_free(char* s);

/* Options default to p = 2, centric-radical, quotient, text, default caps
 * and one job. */
FK_API fk_status fk_options_new(fk_options** out);
FK_API void fk_options_free(fk_options* opts);
FK_API fk_status fk_options_set_prime(fk_options* opts, unsigned p);
FK_API fk_status fk_options_set_collection(fk_options* opts, fk_collection c);
FK_API fk_status fk_options_set_variant(fk_options* opts, fk_variant v);
FK_API fk_status fk_options_set_format(fk_options* opts, fk_format f);
FK_API fk_status fk_options_set_caps(fk_options* opts, size_t subgroups, size_t elements);
FK_API fk_status fk_options_set_jobs(fk_options* opts, unsigned jobs);

/* Groups in the text grammar: permutation generators or a table. */
FK_API fk_status fk_group_parse(const char* text, size_t element_cap, fk_group** out);
FK_API fk_status fk_group_load(const char* path, size_t element_cap, fk_group** out);
FK_API void fk_group_free(fk_group* g);
FK_API size_t fk_group_order(const fk_group* g);

/* Each writes a newly allocated report to *report, also when a reported
 * check fails. *report stays NULL when no report could be produced. name
 * labels the group in the report. */
FK_API fk_status fk_analyze(const fk_group* g, const char* name, const fk_options* opts, char** report);
/* kind: "robinson", "robinson-original" or "leary-stancu". */
FK_API fk_status fk_emit(const fk_group* g, const char* name, const char* kind, const fk_options* opts,
                         char** report);
FK_API fk_status fk_verify(const fk_group* g, const char* name, const char* kind, const fk_options* opts,
                           char** report);
FK_API fk_status fk_linking(const fk_group* g, const char* name, const fk_options* opts, char** report);
/* checks: comma-separated subset of "quaternion,klein,centralizer". */
FK_API fk_status fk_solomon_check(unsigned q, unsigned m, const char* checks, fk_centralizer_mode mode,
                                  const fk_options* opts, char** report);

#ifdef __cplusplus
}
#endif

#endif /* FUSIONKIT_H */
