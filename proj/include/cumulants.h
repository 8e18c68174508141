/*
 Copyright 2026 The cumulants authors
 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

/* C interface to the cumulants library. Every entry point returns a
   cumu_status; on anything but CUMU_OK (and CUMU_IDENTITY_FAILED, which still
   produces a report) a message is available from cumu_last_error() on the
   calling thread. Output text is returned in buffers owned by the caller. */

#ifndef CUMULANTS_H
#define CUMULANTS_H

#include <stddef.h>

#if defined(_WIN32)
#define CUMU_API __declspec(dllexport)
#else
#define CUMU_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cumu_status {
    CUMU_OK = 0,
    CUMU_IDENTITY_FAILED = 1, /* a verified identity did not hold */
    CUMU_USAGE_ERROR = 2,     /* bad name, malformed input, n out of domain */
    CUMU_RESOURCE_LIMIT = 3,  /* size above a documented limit */
    CUMU_INTERNAL_ERROR = 4
} cumu_status;

typedef enum cumu_format { CUMU_FORMAT_JSON = 0, CUMU_FORMAT_CSV = 1, CUMU_FORMAT_TEXT = 2 } cumu_format;

typedef struct cumu_config cumu_config;
typedef struct cumu_buffer cumu_buffer;

/* Receives output incrementally; len excludes any terminator. */
typedef void (*cumu_sink)(const char* data, size_t len, void* user);

CUMU_API const char* cumu_version(void);
CUMU_API const char* cumu_status_name(cumu_status status);
/* Message of the last failing call on this thread, "" if none. */
CUMU_API const char* cumu_last_error(void);

/* Settings shared by the commands: output format (default JSON), enumeration
   limit override (-1 keeps the per-class default), worker threads for
   verification sweeps (default 1) and an optional directory caching tables. */
CUMU_API cumu_status cumu_config_new(cumu_config** out);
CUMU_API void cumu_config_free(cumu_config* config);
CUMU_API cumu_status cumu_config_set_format(cumu_config* config, const char* name); /* json, csv, text */
CUMU_API cumu_status cumu_config_set_limit(cumu_config* config, int limit);
CUMU_API cumu_status cumu_config_set_jobs(cumu_config* config, int jobs);
CUMU_API cumu_status cumu_config_set_cache_dir(cumu_config* config, const char* path); /* NULL or "" disables */
CUMU_API cumu_format cumu_config_format(const cumu_config* config);

CUMU_API const char* cumu_buffer_data(const cumu_buffer* buffer);
CUMU_API size_t cumu_buffer_size(const cumu_buffer* buffer);
CUMU_API void cumu_buffer_free(cumu_buffer* buffer);

/* Identity catalog, in a fixed order. Out-of-range indices return NULL / -1. */
CUMU_API int cumu_identity_count(void);
CUMU_API const char* cumu_identity_name(int index);
CUMU_API const char* cumu_identity_formula(int index);
CUMU_API int cumu_identity_max_n(int index);

/* Streams the members of a partition class ("all", "noncrossing", "interval",
   "irreducible", "connected", "irreducible_noncrossing",
   "connected_noncrossing", "monotone") in restricted-growth-string order. */
CUMU_API cumu_status cumu_enumerate(const cumu_config* config, int n, const char* cls, cumu_sink sink, void* user);

/* Verifies one identity for every n in 1..n_max; "all" runs the catalog with
   each identity capped at its own limit. Returns CUMU_IDENTITY_FAILED when
   any instance fails; the report is produced either way. */
CUMU_API cumu_status cumu_verify(const cumu_config* config, const char* identity, int n_max, cumu_buffer** out);

/* Runs the unproven multivariate alpha check for n in 1..n_max. Mismatches
   are reported, not treated as failures. */
CUMU_API cumu_status cumu_experiment(const cumu_config* config, int n_max, cumu_buffer** out);

/* Coefficient tables: "beta", "alpha", "tutte", "mobius". */
CUMU_API cumu_status cumu_table(const cumu_config* config, const char* what, int n, cumu_buffer** out);

/* Converts a JSON array of rationals between "moments", "classical", "free",
   "boolean" and "monotone" (letters M, K, R, B, H also accepted). The result
   is a compact JSON array of strings. */
CUMU_API cumu_status cumu_convert(const char* from, const char* to, const char* values_json, cumu_buffer** out);

/* n-th multivariate cumulant ("classical", "free", "boolean", "monotone") as
   a polynomial in the moment symbols m{...}. */
CUMU_API cumu_status cumu_cumulant(const cumu_config* config, const char* kind, int n, cumu_buffer** out);

/* Moebius function of lattice "P", "NC" or "I" on [pi, sigma]; sigma NULL
   means the one-block partition. Partitions as "1,3|2" or [[1,3],[2]]. */
CUMU_API cumu_status cumu_mobius(const char* lattice, const char* pi, const char* sigma, cumu_buffer** out);

/* Crossing graph, anti-interval graph and digraph of a partition with their
   Tutte values at (1,0), unique-source orientation counts and pyramid counts. */
CUMU_API cumu_status cumu_partition_info(const cumu_config* config, const char* partition, cumu_buffer** out);

#ifdef __cplusplus
}
#endif

#endif /* CUMULANTS_H */
