// Copyright 2026 The sptc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the sptc library. Every function returns an sptc_status;
 * on failure sptc_last_error() describes the problem for the calling thread.
 * Strings returned through char** outputs are owned by the caller and must be
 * released with sptc_string_free. */
#ifndef SPTC_SPTC_H_
#define SPTC_SPTC_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SPTC_BUILDING_LIBRARY)
#define SPTC_API __declspec(dllexport)
#else
#define SPTC_API __declspec(dllimport)
#endif
#else
#define SPTC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sptc_status {
  SPTC_OK = 0,
  SPTC_ERR_INVALID_ARGUMENT = 1,
  SPTC_ERR_PARSE = 2,
  SPTC_ERR_INVARIANT = 3,
  SPTC_ERR_BUDGET = 4,
  SPTC_ERR_INTERNAL = 5
} sptc_status;

typedef enum sptc_format { SPTC_FORMAT_JSON = 0, SPTC_FORMAT_CSV = 1 } sptc_format;

/* A classical linear code over GF(2^s). */
typedef struct sptc_code sptc_code_t;
/* A family of stabilizer codes built from a linear code. */
typedef struct sptc_family sptc_family_t;

SPTC_API const char* sptc_version(void);
SPTC_API const char* sptc_last_error(void);
SPTC_API const char* sptc_status_name(sptc_status status);
SPTC_API void sptc_string_free(char* str);

/* Primitive polynomial, companion matrices and element table of GF(2^s). */
SPTC_API sptc_status sptc_field_show(unsigned s, char** out_json);

/* family is "ers", "ovoid" or "appendix-c"; r is ignored except for ers. */
SPTC_API sptc_status sptc_code_build(const char* family, unsigned s, unsigned r, sptc_code_t** out);
SPTC_API sptc_status sptc_code_load(const char* json, sptc_code_t** out);
SPTC_API sptc_status sptc_code_to_json(const sptc_code_t* code, char** out_json);
/* Exhaustive minimum distance. *consistent is 0 when the code carries a
 * distance that disagrees with the enumeration. */
SPTC_API sptc_status sptc_code_mindist(const sptc_code_t* code, uint64_t budget, char** out_json,
                                       int* consistent);
SPTC_API void sptc_code_free(sptc_code_t* code);

SPTC_API sptc_status sptc_family_build(const sptc_code_t* code, sptc_family_t** out);
/* Accepts an SPTC document; the generators are checked against a rebuild. */
SPTC_API sptc_status sptc_family_load(const char* json, sptc_family_t** out);
SPTC_API sptc_status sptc_family_to_json(const sptc_family_t* family, char** out_json);
SPTC_API size_t sptc_family_num_qubits(const sptc_family_t* family);
SPTC_API size_t sptc_family_size(const sptc_family_t* family);
/* Worst-case strong undetected fraction. exhaustive != 0 sweeps all 4^n - 1
 * errors (SPTC_ERR_BUDGET above budget); otherwise draws `samples` errors. */
SPTC_API sptc_status sptc_family_verify(const sptc_family_t* family, int exhaustive, uint64_t budget,
                                        uint64_t samples, uint64_t seed, unsigned workers,
                                        char** out_json, int* holds);
SPTC_API void sptc_family_free(sptc_family_t* family);

/* Normalizes an error in any accepted notation to "XHEX:ZHEX". */
SPTC_API sptc_status sptc_pauli_normalize(const char* text, size_t num_qubits, char** out);

/* Purity test against fixed Pauli errors. exact != 0 enumerates every code;
 * otherwise runs `trials` seeded rounds per error. */
SPTC_API sptc_status sptc_ptp_simulate(const sptc_family_t* family, const char* const* errors,
                                       size_t num_errors, int exact, uint64_t trials, uint64_t seed,
                                       unsigned workers, char** out_json, int* holds);

SPTC_API sptc_status sptc_qas_simulate(const sptc_family_t* family, const char* error, uint64_t seed,
                                       uint64_t sessions, char** out_json, int* holds);

/* family is "ers" or "ovoid". */
SPTC_API sptc_status sptc_qas_plan(const char* family, unsigned s, unsigned r, uint64_t qubits,
                                   sptc_format format, char** out);
SPTC_API sptc_status sptc_qas_table(const char* preset, sptc_format format, char** out);

/* eps_in is an exact rational such as "0", "1/10" or "0.05"; NULL means 0. */
SPTC_API sptc_status sptc_gepp_params(const char* family, unsigned s, unsigned r, const char* eps_in,
                                      int dcs, char** out_json);
SPTC_API sptc_status sptc_gepp_fig1(unsigned s_max, sptc_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* SPTC_SPTC_H_ */
