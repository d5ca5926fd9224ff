// Copyright 2026 The sboxlab Authors.
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

/* C interface to sboxlab. Every function returning sbx_status leaves a
 * description of the last failure in sbx_last_error() (per thread).
 * Strings returned through char** are owned by the caller and released with
 * sbx_string_free(). */

#ifndef SBOXLAB_SBOXLAB_H_
#define SBOXLAB_SBOXLAB_H_

#include <stddef.h>
#include <stdint.h>

#if defined(SBOXLAB_BUILDING)
#define SBX_API __attribute__((visibility("default")))
#else
#define SBX_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as CLI exit codes. */
typedef enum sbx_status {
  SBX_OK = 0,
  SBX_ERR_USAGE = 1,
  SBX_ERR_PARSE = 2,
  SBX_ERR_PRECONDITION = 3,
  SBX_ERR_VERIFY = 4,
  SBX_ERR_INTERNAL = 5
} sbx_status;

typedef struct sbx_sbox sbx_sbox;
typedef struct sbx_report sbx_report;
typedef struct sbx_search sbx_search;

SBX_API const char* sbx_version(void);
SBX_API const char* sbx_last_error(void);
SBX_API void sbx_string_free(char* s);

/* ---- S-boxes ---- */

SBX_API sbx_status sbx_sbox_create(int n, int m, const uint32_t* entries, size_t count,
                                   sbx_sbox** out);
/* format: "decimal", "hex" or "json". m_override 0 infers m. */
SBX_API sbx_status sbx_sbox_parse(const char* text, const char* format, int m_override,
                                  sbx_sbox** out);
/* format NULL picks by extension (.json, .hex, otherwise decimal). */
SBX_API sbx_status sbx_sbox_load(const char* path, const char* format, int m_override,
                                 sbx_sbox** out);
SBX_API sbx_status sbx_sbox_fixture(const char* name, sbx_sbox** out);
SBX_API void sbx_sbox_free(sbx_sbox* s);

SBX_API int sbx_sbox_n(const sbx_sbox* s);
SBX_API int sbx_sbox_m(const sbx_sbox* s);
SBX_API size_t sbx_sbox_size(const sbx_sbox* s);
SBX_API uint32_t sbx_sbox_get(const sbx_sbox* s, size_t x);
SBX_API int sbx_sbox_is_bijective(const sbx_sbox* s);
/* Fixture name or file path. Owned by the handle. */
SBX_API const char* sbx_sbox_name(const sbx_sbox* s);
/* Provenance and repair notes, one per line; empty for user files. */
SBX_API const char* sbx_sbox_notes(const sbx_sbox* s);
SBX_API sbx_status sbx_sbox_set_name(sbx_sbox* s, const char* name);
SBX_API sbx_status sbx_sbox_format(const sbx_sbox* s, const char* format, char** out);
SBX_API sbx_status sbx_sbox_digest(const sbx_sbox* s, char** out);

SBX_API size_t sbx_fixture_count(void);
SBX_API const char* sbx_fixture_name(size_t index);

/* ---- Metric reports ---- */

typedef struct sbx_report_options {
  const char* cc_model;     /* "hw-squared" (default), "hw-squared-norm", "single-bit" */
  const char* cc_statistic; /* "variance" (default), "min", "mean", "max" */
  const char* snr_variant;  /* "sign" (default), "zero-one" */
} sbx_report_options;

/* options may be NULL. */
SBX_API sbx_status sbx_evaluate(const sbx_sbox* s, const sbx_report_options* options,
                                sbx_report** out);
SBX_API void sbx_report_free(sbx_report* r);

/* tag: balanced, nl, degree, ci, du, robustness, fp, ofp, abs_indicator,
 * sum_sq, ai, snr, to, kappa. */
SBX_API sbx_status sbx_report_get(const sbx_report* r, const char* tag, double* value);
SBX_API sbx_status sbx_report_robustness(const sbx_report* r, int64_t* num, int64_t* den);
/* metrics: comma-separated tags or NULL for all. */
SBX_API sbx_status sbx_report_json(const sbx_report* r, const char* metrics, char** out);
/* Text table with one column per report; spread adds min/avg/max columns. */
SBX_API sbx_status sbx_report_table(const sbx_report* const* reports, const char* const* titles,
                                    size_t count, const sbx_report* const* spread,
                                    size_t spread_count, const char* metrics, char** out);

/* ---- Search ---- */

typedef struct sbx_search_options {
  const char* mode;          /* "exhaustive", "random-sample", "genetic" */
  uint64_t seed;
  uint64_t max_candidates;   /* random-sample draws; genetic evaluation cap */
  int population;
  int generations;
  const char* ordering;      /* "descending", "ascending", "best-of-orderings" */
  const char* to_direction;  /* "le", "ge" */
  const char* cc_model;
  int require_snr;
  int require_cc;
  int workers;
} sbx_search_options;

SBX_API void sbx_search_options_init(sbx_search_options* options);

typedef struct sbx_tally {
  uint64_t total;
  uint64_t bijective;
  uint64_t fp_zero;
  uint64_t ofp_zero;
  uint64_t snr_better;
  uint64_t to_better;
  uint64_t cc_better;
  uint64_t all_better;
} sbx_tally;

SBX_API sbx_status sbx_search_run(const sbx_sbox* initial, const sbx_search_options* options,
                                  sbx_search** out);
SBX_API void sbx_search_free(sbx_search* s);
SBX_API sbx_status sbx_search_tally(const sbx_search* s, sbx_tally* out);
SBX_API size_t sbx_search_accepted_count(const sbx_search* s);
SBX_API sbx_status sbx_search_accepted(const sbx_search* s, size_t index, sbx_sbox** out);
/* box_files[i] names the file written for accepted box i; may be NULL. */
SBX_API sbx_status sbx_search_json(const sbx_search* s, const char* const* box_files,
                                   size_t file_count, char** out);

/* ---- Verification ---- */

/* scope: "all", "oracles", "calibration". seed 0 and cases 0 pick defaults.
 * Returns SBX_ERR_VERIFY when any check fails; the log is set either way. */
SBX_API sbx_status sbx_verify(const char* scope, uint64_t seed, int cases, char** log);

#ifdef __cplusplus
}
#endif

#endif /* SBOXLAB_SBOXLAB_H_ */
