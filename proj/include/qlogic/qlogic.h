/*
 * Copyright 2026 The qlogic Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libqlogic.
 *
 * Every object is an opaque handle created by a *_create / *_parse / qlg_run
 * call and released with the matching *_free. Functions return a qlg_status;
 * on failure, qlg_last_error() describes the problem for the calling thread.
 * Strings returned through char** must be released with qlg_string_free().
 *
 * Complex numbers are passed as interleaved (re, im) doubles.
 */

#ifndef QLOGIC_QLOGIC_H
#define QLOGIC_QLOGIC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(QLOGIC_BUILDING_LIBRARY)
#    define QLG_API __declspec(dllexport)
#  else
#    define QLG_API __declspec(dllimport)
#  endif
#else
#  define QLG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qlg_status {
    QLG_OK = 0,
    QLG_ERR_DIMENSION = 1,
    QLG_ERR_NOT_NORMALIZED = 2,
    QLG_ERR_INDEX = 3,
    QLG_ERR_NO_EIGENVALUE = 4,
    QLG_ERR_MIXED_BASES = 5,
    QLG_ERR_OVERLAP = 6,
    QLG_ERR_NONCOMMUTING = 7,
    QLG_ERR_IMPOSSIBLE_OUTCOME = 8,
    QLG_ERR_UNKNOWN_STAGE = 9,
    QLG_ERR_INVALID_ARGUMENT = 10,
    QLG_ERR_SYNTAX = 11,
    QLG_ERR_UNKNOWN_SCENARIO = 12,
    QLG_ERR_IO = 13,
    QLG_ERR_INTERNAL = 14
} qlg_status;

typedef enum qlg_truth { QLG_TRUE = 0, QLG_FALSE = 1, QLG_INDETERMINATE = 2 } qlg_truth;

typedef enum qlg_format { QLG_FORMAT_TEXT = 0, QLG_FORMAT_CSV = 1 } qlg_format;

typedef enum qlg_check_status { QLG_CHECK_PASS = 0, QLG_CHECK_FAIL = 1, QLG_CHECK_SKIPPED = 2 } qlg_check_status;

typedef struct qlg_basis qlg_basis;
typedef struct qlg_state qlg_state;
typedef struct qlg_bipartite qlg_bipartite;
typedef struct qlg_config qlg_config;
typedef struct qlg_report qlg_report;

/* Check row as exposed by a report. Strings stay valid until the report is
 * freed. Non-applicable numeric columns are NaN. */
typedef struct qlg_check {
    const char* name;
    double exact;
    double empirical;
    double tolerance;
    qlg_check_status status;
    const char* note;
} qlg_check;

QLG_API const char* qlg_version(void);

/* Message for the last failed call on this thread ("" if none). */
QLG_API const char* qlg_last_error(void);
/* 1-based config line of the last qlg_config_parse failure, 0 if unknown. */
QLG_API size_t qlg_last_error_line(void);

QLG_API void qlg_string_free(char* s);

/* ---- Hilbert space ---------------------------------------------------- */

/* `vectors` holds dim eigenvectors of dim complex entries each (2*dim*dim
 * doubles); `eigenvalues` holds dim reals. */
QLG_API qlg_status qlg_basis_create(size_t dim, const double* vectors, const double* eigenvalues,
                                    qlg_basis** out);
QLG_API qlg_status qlg_basis_qubit(double angle, qlg_basis** out);
QLG_API size_t qlg_basis_dim(const qlg_basis* basis);
QLG_API void qlg_basis_free(qlg_basis* basis);

/* `amplitudes` holds 2*dim doubles. The state must be normalized. */
QLG_API qlg_status qlg_state_create(size_t dim, const double* amplitudes, qlg_state** out);
QLG_API size_t qlg_state_dim(const qlg_state* state);
QLG_API void qlg_state_free(qlg_state* state);

/* ---- Truth operators --------------------------------------------------- */

/* Truth of "K is one of {k_l : l in indices}" in `state`. */
QLG_API qlg_status qlg_truth_value(const qlg_basis* basis, const size_t* indices, size_t count,
                                   const qlg_state* state, qlg_truth* truth, double* expectation);

/* Writes the support indices (ascending) into indices_out, up to capacity;
 * *count receives the full support size. */
QLG_API qlg_status qlg_support(const qlg_state* state, const qlg_basis* basis, double eps, size_t* indices_out,
                               size_t capacity, size_t* count);

QLG_API qlg_status qlg_theorem2_witness(const qlg_state* state, const qlg_basis* basis, double eps, int* witness);

/* ---- Measurement ------------------------------------------------------- */

/* One (eigenvalue, probability) pair per distinct eigenvalue. */
QLG_API qlg_status qlg_born_distribution(const qlg_state* state, const qlg_basis* basis, double* eigenvalues,
                                         double* probabilities, size_t capacity, size_t* count);

/* ---- Two-channel states ------------------------------------------------ */

/* `amplitudes` is the d1 x d2 matrix a_ij in row-major order (2*d1*d2
 * doubles); rows follow basis1, columns basis2. */
QLG_API qlg_status qlg_bipartite_create(size_t d1, size_t d2, const double* amplitudes, const qlg_basis* basis1,
                                        const qlg_basis* basis2, qlg_bipartite** out);
QLG_API void qlg_bipartite_free(qlg_bipartite* state);

QLG_API qlg_status qlg_joint_probability(const qlg_bipartite* state, size_t n, size_t j, double* out);

/* channel is 1 or 2. partner_out receives 2 * (partner dimension) doubles. */
QLG_API qlg_status qlg_conditional_state(const qlg_bipartite* state, int channel, size_t outcome,
                                         double* probability, double* partner_out, size_t partner_capacity);

QLG_API qlg_status qlg_dual_ensemble_max_discrepancy(const qlg_bipartite* state, double* out);

/* ---- Scenario runner --------------------------------------------------- */

QLG_API qlg_status qlg_config_parse(const char* text, qlg_config** out);
QLG_API void qlg_config_free(qlg_config* config);
QLG_API void qlg_config_set_seed(qlg_config* config, uint64_t seed);
QLG_API qlg_status qlg_config_set_trials(qlg_config* config, uint64_t trials);
QLG_API qlg_status qlg_config_set_output(qlg_config* config, const char* path);
/* Empty string when the config names no output file. */
QLG_API const char* qlg_config_output(const qlg_config* config);
QLG_API qlg_status qlg_config_echo(const qlg_config* config, char** out);
QLG_API qlg_status qlg_config_digest(const qlg_config* config, char** out);

/* `threads` = 0 or 1 runs single-threaded; output does not depend on it. */
QLG_API qlg_status qlg_run(const qlg_config* config, unsigned threads, qlg_report** out);
QLG_API void qlg_report_free(qlg_report* report);
/* 1 if no check failed. */
QLG_API int qlg_report_passed(const qlg_report* report);
QLG_API size_t qlg_report_check_count(const qlg_report* report);
QLG_API qlg_status qlg_report_check(const qlg_report* report, size_t index, qlg_check* out);
QLG_API qlg_status qlg_report_emit(const qlg_report* report, qlg_format format, char** out);
/* "n,j,exact,empirical,stderr" table; empty string when the scenario has none. */
QLG_API qlg_status qlg_report_emit_cells(const qlg_report* report, char** out);

#ifdef __cplusplus
}
#endif

#endif /* QLOGIC_QLOGIC_H */
