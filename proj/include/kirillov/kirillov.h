/* SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
 * SPDX-License-Identifier: Apache-2.0 */

/* C interface to the kirillov-lab core. Structured inputs and outputs are
 * JSON text; strings returned through char** are owned by the caller and
 * released with kl_string_free. */

#ifndef KIRILLOV_KIRILLOV_H
#define KIRILLOV_KIRILLOV_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(KIRILLOV_BUILDING)
#define KL_API __attribute__((visibility("default")))
#else
#define KL_API
#endif

typedef enum kl_status {
  KL_OK = 0,
  KL_ERR_INVALID_ARGUMENT,
  KL_ERR_PARSE,
  KL_ERR_INVALID_COEFFS,
  KL_ERR_REGIME_MISMATCH,
  KL_ERR_TRIVIAL_CHARACTER,
  KL_ERR_AMBIGUOUS_VALUATION,
  KL_ERR_INCONSISTENT,
  KL_ERR_WEIGHT_TOO_LARGE,
  KL_ERR_NOT_VANISHING,
  KL_ERR_HORIZON_EXCEEDED,
  KL_ERR_SINGULAR_MATRIX,
  KL_ERR_UNSUPPORTED,
  KL_ERR_IO,
  KL_ERR_INTERNAL
} kl_status;

typedef enum kl_verdict { KL_ALL_PASS = 0, KL_VIOLATION = 1, KL_INCONCLUSIVE = 2 } kl_verdict;

typedef struct kl_context kl_context;
/* Generator coefficients together with the representation they belong to. */
typedef struct kl_coeffs kl_coeffs;

KL_API const char* kl_version(void);
KL_API const char* kl_status_name(kl_status status);

KL_API kl_context* kl_context_new(void);
KL_API void kl_context_free(kl_context* ctx);
/* Message of the last failed call on ctx; empty after a success. */
KL_API const char* kl_last_error(const kl_context* ctx);
KL_API void kl_string_free(char* s);

KL_API size_t kl_suite_count(void);
KL_API const char* kl_suite_name(size_t index);
/* config: {"p": 5, "n": [0, 1, 2, 3], "trials": 100, "seed": 1}, every key optional. */
KL_API kl_status kl_verify_suite(kl_context* ctx, const char* name, const char* config_json, char** result_json,
                                 int* passed);

/* Parses a coefficient document ({"schema", "params", "entries"}) and checks
 * every entry against its lattice. */
KL_API kl_status kl_coeffs_from_json(kl_context* ctx, const char* json, kl_coeffs** out);
KL_API void kl_coeffs_free(kl_coeffs* coeffs);
KL_API kl_status kl_coeffs_params_json(kl_context* ctx, const kl_coeffs* coeffs, char** params_json);

/* Amplitude rows for levels k0..l_max plus the two-step identity audit. */
KL_API kl_status kl_expand(kl_context* ctx, const kl_coeffs* coeffs, int l_max, char** table_json);

/* Amplitude bound check on levels k0..0. fault_json is NULL or
 * {"l": L, "beta": "a/p^k", "power": K}: C_L(beta) is multiplied by p^K
 * before checking. */
KL_API kl_status kl_check(kl_context* ctx, const kl_coeffs* coeffs, const char* fault_json, char** result_json,
                          int* all_pass);

/* grid: keys of the search grid (primes, n, m, regimes, k0, depth, trials,
 * seed, interior, wild, max_characters). cache_dir may be NULL. */
KL_API kl_status kl_search(kl_context* ctx, const char* grid_json, unsigned workers, const char* cache_dir,
                           char** report_json, kl_verdict* verdict);

/* Gauss sums tau(eps^-1) of the characters of conductor nu; exponent < 0
 * selects every character, otherwise eps = omega^exponent (nu = 1 only). */
KL_API kl_status kl_gauss(kl_context* ctx, long p, int nu, long exponent, char** result_json);

#ifdef __cplusplus
}
#endif

#endif /* KIRILLOV_KIRILLOV_H */
