// Copyright 2026 The ksqrng Authors
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

/*
 * C interface to the ksqrng pipeline: simulate the qutrit protocol, certify
 * the trace, debias it, run the statistical battery and feed the bits to the
 * Solovay-Strassen consumer.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns a ksq_status; on failure the message is
 * available from ksq_last_error() on the same thread. Report strings are
 * JSON, owned by the caller, and released with ksq_string_free.
 */
#ifndef KSQRNG_H
#define KSQRNG_H

#include <stddef.h>
#include <stdint.h>

#if defined(KSQ_BUILDING_LIBRARY)
#define KSQ_API __attribute__((visibility("default")))
#else
#define KSQ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ksq_status {
    KSQ_OK = 0,
    KSQ_ERR_INVALID_ARGUMENT = 1, /* null handle, bad parameter */
    KSQ_ERR_CONFIG = 2,           /* rejected configuration key or value */
    KSQ_ERR_IO = 3,               /* file could not be opened, read or written */
    KSQ_ERR_PARSE = 4,            /* malformed trace or bit file */
    KSQ_ERR_EXHAUSTED = 5,        /* bit source ran out */
    KSQ_ERR_ANALYSIS = 6,         /* input unsuitable for the analysis */
    KSQ_ERR_RESOURCE = 7,         /* allocation failure */
    KSQ_ERR_INTERNAL = 8
} ksq_status;

typedef struct ksq_config ksq_config;
typedef struct ksq_trace ksq_trace;
typedef struct ksq_bits ksq_bits;

KSQ_API const char* ksq_version(void);
KSQ_API const char* ksq_last_error(void);
/* Name of the configuration key behind the last KSQ_ERR_CONFIG, or "". */
KSQ_API const char* ksq_last_error_key(void);
KSQ_API void ksq_string_free(char* s);

/* Configuration */
KSQ_API ksq_status ksq_config_new(ksq_config** out);
KSQ_API ksq_status ksq_config_load(const char* path, ksq_config** out);
KSQ_API ksq_status ksq_config_parse(const char* text, ksq_config** out);
KSQ_API ksq_status ksq_config_set(ksq_config* cfg, const char* key, const char* value);
KSQ_API ksq_status ksq_config_get_u64(const ksq_config* cfg, const char* key, uint64_t* value);
KSQ_API void ksq_config_free(ksq_config* cfg);

/* Generation. workers = 0 uses every hardware thread. */
KSQ_API ksq_status ksq_generate(const ksq_config* cfg, unsigned workers, ksq_trace** out,
                                char** report);

/* Traces */
KSQ_API ksq_status ksq_trace_read(const char* path, ksq_trace** out);
KSQ_API ksq_status ksq_trace_write(const ksq_trace* trace, const char* path);
KSQ_API ksq_status ksq_trace_counts(const ksq_trace* trace, uint64_t* zero, uint64_t* one,
                                    uint64_t* discard);
KSQ_API void ksq_trace_free(ksq_trace* trace);

KSQ_API ksq_status ksq_certify(const ksq_trace* trace, char** report);

/* Drops discards, then applies the von Neumann extractor. */
KSQ_API ksq_status ksq_extract(const ksq_trace* trace, ksq_bits** out, char** report);

/* Bit streams */
KSQ_API ksq_status ksq_bits_from_bytes(const uint8_t* bits, uint64_t n_bits, ksq_bits** out);
KSQ_API ksq_status ksq_bits_read(const char* path, ksq_bits** out);
KSQ_API ksq_status ksq_bits_write(const ksq_bits* bits, const char* path);
KSQ_API ksq_status ksq_bits_length(const ksq_bits* bits, uint64_t* n_bits);
KSQ_API void ksq_bits_free(ksq_bits* bits);

/* Entropy, NIST subset and bucket analysis. tests_passed/tests_applicable
 * may be null. */
KSQ_API ksq_status ksq_stats(const ksq_bits* bits, uint64_t bucket_size, char** report,
                             unsigned* tests_passed, unsigned* tests_applicable);

/* Solovay-Strassen over every Carmichael number below limit. non_composite
 * (may be null) receives the number of verdicts that were not composite. */
KSQ_API ksq_status ksq_consume_ss(const ksq_bits* bits, uint64_t limit, uint32_t witnesses,
                                  char** report, uint64_t* non_composite);

#ifdef __cplusplus
}
#endif

#endif /* KSQRNG_H */
