// Copyright 2026 The hypscatter Authors
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

/* C interface of the hypscatter library. All functions return an hs_status;
 * on failure hs_last_error() describes the problem (per thread). Handles are
 * opaque and must be released with the matching *_free function. */
#ifndef HYPSCATTER_H
#define HYPSCATTER_H

#include <stddef.h>

#if defined(HYPSCATTER_BUILDING)
#define HS_API __attribute__((visibility("default")))
#else
#define HS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hs_status {
  HS_OK = 0,
  HS_ERR_INVALID_ARGUMENT = 1,
  HS_ERR_DOMAIN = 2,
  HS_ERR_BUDGET = 3,
  HS_ERR_CONVERGENCE = 4,
  HS_ERR_PHASE_STEP = 5,
  HS_ERR_CONSISTENCY = 6,
  HS_ERR_IO = 7,
  HS_ERR_INTERNAL = 99
} hs_status;

typedef struct hs_model hs_model;
typedef struct hs_zero_list hs_zero_list;
typedef struct hs_spectrum hs_spectrum;

/* Receives one line of progress output; `user` is passed through. */
typedef void (*hs_log_fn)(const char* line, void* user);

HS_API const char* hs_version(void);
HS_API const char* hs_last_error(void);

/* Scattering models. lattice: "SL2Z", "Gamma0(p)" or "SL2ZiGaussian";
 * precision: "double" or "dd" (NULL means "double"). */
HS_API hs_status hs_model_closed_form(const char* lattice, const char* precision, hs_model** out);
HS_API hs_status hs_model_series(const char* lattice, double lambda_max, hs_model** out);
HS_API void hs_model_free(hs_model* model);

HS_API hs_status hs_model_info(const hs_model* model, int* d, int* kappa, double* a_gamma);

/* phi_ij(s) with its tail bound (0 for closed-form models). */
HS_API hs_status hs_phi_entry(const hs_model* model, int i, int j, double s_re, double s_im,
                              double* out_re, double* out_im, double* tail_bound);
HS_API hs_status hs_determinant(const hs_model* model, double s_re, double s_im, double* out_re,
                                double* out_im);
HS_API hs_status hs_lstar(const hs_model* model, double s_re, double s_im, double* out_re,
                          double* out_im);
HS_API hs_status hs_functional_equation_residual(const hs_model* model, double s_re, double s_im,
                                                 double* out);

/* Zeros of L* with 1 <= gamma <= T to the right of the critical line. */
HS_API hs_status hs_zero_census(const hs_model* model, double T, hs_zero_list** out);
HS_API size_t hs_zero_list_size(const hs_zero_list* list);
HS_API hs_status hs_zero_list_get(const hs_zero_list* list, size_t index, double* beta,
                                  double* gamma, int* multiplicity);
HS_API void hs_zero_list_free(hs_zero_list* list);

/* Primitive length spectrum up to L_max (at most 15). */
HS_API hs_status hs_length_spectrum(const char* lattice, double L_max, hs_spectrum** out);
HS_API size_t hs_spectrum_size(const hs_spectrum* spectrum);
HS_API hs_status hs_spectrum_get(const hs_spectrum* spectrum, size_t index, double* length,
                                 long long* multiplicity, long long* trace);
HS_API void hs_spectrum_free(hs_spectrum* spectrum);

/* Runs "scattering", "zeros", "lengths" or "verify" with key=value settings
 * (the keys of the config file). *exit_code is 0 when every check passed and
 * 1 when one failed. */
HS_API hs_status hs_run_command(const char* command, const char* const* keys,
                                const char* const* values, size_t count, hs_log_fn log,
                                void* user, int* exit_code);

#ifdef __cplusplus
}
#endif

#endif /* HYPSCATTER_H */
