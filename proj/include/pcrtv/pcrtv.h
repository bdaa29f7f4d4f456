// Copyright 2026 The pcrtv Authors
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

/* C interface to pcrtv. Every call returns a status code; on failure the
 * message is available from pcrtv_last_error() on the calling thread.
 * Strings returned through char** are owned by the caller and released
 * with pcrtv_string_free(). Rationals cross the boundary as "p/q" text. */

#ifndef PCRTV_H
#define PCRTV_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(PCRTV_BUILDING)
#define PCRTV_API __attribute__((visibility("default")))
#else
#define PCRTV_API
#endif

typedef enum pcrtv_status {
  PCRTV_OK = 0,
  PCRTV_ERR_VALIDATION = 2, /* rejected input */
  PCRTV_ERR_INTERNAL = 3,   /* internal assertion failed */
  PCRTV_ERR_IO = 4,
  PCRTV_ERR_CONVERGENCE = 5,
  PCRTV_ERR_ARGUMENT = 6 /* null handle or pointer */
} pcrtv_status;

typedef enum pcrtv_mode { PCRTV_MODE_BOUNDED = 0, PCRTV_MODE_PLANE = 1 } pcrtv_mode;

typedef struct pcrtv_pcr pcrtv_pcr;
typedef struct pcrtv_rof pcrtv_rof;
typedef struct pcrtv_timeline pcrtv_timeline;

PCRTV_API const char* pcrtv_version(void);
PCRTV_API const char* pcrtv_last_error(void);
PCRTV_API void pcrtv_string_free(char* s);

/* PCR functions. A handle carries the grid, the values and the mode. */
PCRTV_API pcrtv_status pcrtv_pcr_parse_json(const char* text, pcrtv_pcr** out);
PCRTV_API pcrtv_status pcrtv_pcr_read(const char* path, pcrtv_pcr** out);
PCRTV_API pcrtv_status pcrtv_pcr_import_pgm(const char* path, int levels, pcrtv_pcr** out); /* levels <= 0: none */
PCRTV_API pcrtv_status pcrtv_pcr_to_json(const pcrtv_pcr* f, char** out);
PCRTV_API pcrtv_status pcrtv_pcr_write(const pcrtv_pcr* f, const char* path);
PCRTV_API pcrtv_status pcrtv_pcr_get_mode(const pcrtv_pcr* f, pcrtv_mode* out);
PCRTV_API pcrtv_status pcrtv_pcr_set_mode(pcrtv_pcr* f, pcrtv_mode mode);
PCRTV_API pcrtv_status pcrtv_pcr_dims(const pcrtv_pcr* f, size_t* nx, size_t* ny);
PCRTV_API pcrtv_status pcrtv_pcr_range(const pcrtv_pcr* f, char** min, char** max);
PCRTV_API pcrtv_status pcrtv_pcr_value(const pcrtv_pcr* f, size_t i, size_t j, char** out);
/* vmin and vmax both NULL: use the range of f. */
PCRTV_API pcrtv_status pcrtv_pcr_render_pgm(const pcrtv_pcr* f, const char* path, int scale, const char* vmin,
                                            const char* vmax);
PCRTV_API void pcrtv_pcr_free(pcrtv_pcr* f);

/* Exact minimizer; lambda = "0" returns the datum. */
PCRTV_API pcrtv_status pcrtv_minimize(const pcrtv_pcr* u0, const char* lambda, pcrtv_pcr** out);

PCRTV_API pcrtv_status pcrtv_rof_solve(const pcrtv_pcr* u0, const char* lambda, pcrtv_rof** out);
PCRTV_API pcrtv_status pcrtv_rof_result(const pcrtv_rof* sol, pcrtv_pcr** out); /* on the input grid */
PCRTV_API pcrtv_status pcrtv_rof_stage_count(const pcrtv_rof* sol, size_t* out);
PCRTV_API pcrtv_status pcrtv_rof_verify(const pcrtv_rof* sol, const pcrtv_pcr* u0, int* passed, char** report_json);
PCRTV_API void pcrtv_rof_free(pcrtv_rof* sol);

/* t_end NULL or "inf" runs to the steady state. */
PCRTV_API pcrtv_status pcrtv_flow(const pcrtv_pcr* u0, const char* t_end, pcrtv_timeline** out);
PCRTV_API pcrtv_status pcrtv_timeline_event_count(const pcrtv_timeline* tl, size_t* out);
PCRTV_API pcrtv_status pcrtv_timeline_events_json(const pcrtv_timeline* tl, char** out);
PCRTV_API pcrtv_status pcrtv_timeline_horizon(const pcrtv_timeline* tl, char** out);
PCRTV_API pcrtv_status pcrtv_timeline_equivalence_window(const pcrtv_timeline* tl, char** out);
PCRTV_API pcrtv_status pcrtv_timeline_solution_at(const pcrtv_timeline* tl, const char* t, pcrtv_pcr** out);
PCRTV_API void pcrtv_timeline_free(pcrtv_timeline* tl);

PCRTV_API pcrtv_status pcrtv_extinction_bound(const pcrtv_pcr* u0, char** out);

/* Solves exactly and with the floating-point oracle, reports the max
 * deviation and the oracle's final duality gap. */
PCRTV_API pcrtv_status pcrtv_oracle_check(const pcrtv_pcr* u0, const char* lambda, double tol, double* max_deviation,
                                          double* gap);

#ifdef __cplusplus
}
#endif

#endif /* PCRTV_H */
