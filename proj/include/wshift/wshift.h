// Copyright 2026 The wshift Authors
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

#ifndef WSHIFT_WSHIFT_H
#define WSHIFT_WSHIFT_H

/*
 * C interface to the weighted shift analysis library.
 *
 * Objects are opaque handles created by the library and released with the
 * matching *_destroy function. Every fallible call returns a wshift_status;
 * on failure wshift_last_error() describes the problem for the calling
 * thread until its next failing call. Reports are immutable snapshots and
 * carry their full content as a JSON document; see docs/json_schema.md.
 *
 * Weight indices are 1-based and cyclic: index n + j refers to weight j.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(WSHIFT_BUILDING_LIBRARY)
#    define WSHIFT_API __declspec(dllexport)
#  else
#    define WSHIFT_API __declspec(dllimport)
#  endif
#else
#  define WSHIFT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wshift_status {
    WSHIFT_OK = 0,
    WSHIFT_ERR_DIMENSION = 1,
    WSHIFT_ERR_VALIDATION = 2,
    WSHIFT_ERR_DOMAIN = 3,
    WSHIFT_ERR_CONTRACT = 4,
    WSHIFT_ERR_CONVERGENCE = 5,
    WSHIFT_ERR_PRECONDITION = 6,
    WSHIFT_ERR_SIZE = 7,
    WSHIFT_ERR_REGIME = 8,
    WSHIFT_ERR_NULL_ARGUMENT = 9,
    WSHIFT_ERR_INTERNAL = 10
} wshift_status;

/* Default modulus tolerance used when a tol argument is negative. */
#define WSHIFT_DEFAULT_TOL 1e-10

typedef struct wshift_shift wshift_shift;
typedef struct wshift_report wshift_report;

WSHIFT_API const char *wshift_status_string(wshift_status status);

/* Message for the most recent failure on this thread ("" if none). */
WSHIFT_API const char *wshift_last_error(void);

/* ---- shifts ------------------------------------------------------------ */

/* n >= 2 weights, given as separate real and imaginary arrays. `im` may be
 * NULL for real weights. */
WSHIFT_API wshift_status wshift_shift_create(const double *re, const double *im, size_t n,
                                             wshift_shift **out);
WSHIFT_API void wshift_shift_destroy(wshift_shift *shift);

WSHIFT_API size_t wshift_shift_size(const wshift_shift *shift);
WSHIFT_API wshift_status wshift_shift_weight(const wshift_shift *shift, int64_t j, double *re,
                                             double *im);

/* New shift with b_j = a_{k+j}. */
WSHIFT_API wshift_status wshift_shift_rotate(const wshift_shift *shift, int64_t k,
                                             wshift_shift **out);

/* Dense realization, n*n row-major entries into re[] and im[]. */
WSHIFT_API wshift_status wshift_shift_to_matrix(const wshift_shift *shift, double *re, double *im);

/* ---- scalar queries ---------------------------------------------------- */

/* Circularly symmetric function S_r of n nonnegative inputs. */
WSHIFT_API wshift_status wshift_circ_sym(const double *inputs, size_t n, int r, double *out);

/* Closed-form Kippenhahn polynomial p(x, y, z); n >= 3. */
WSHIFT_API wshift_status wshift_kippenhahn_eval(const wshift_shift *shift, double x, double y,
                                                double z, double *out);

/* det(x Re A + y Im A + z I) evaluated directly. */
WSHIFT_API wshift_status wshift_kippenhahn_oracle(const wshift_shift *shift, double x, double y,
                                                  double z, double *out);

WSHIFT_API wshift_status wshift_support_function(const wshift_shift *shift, double theta,
                                                 double *out);

/* ---- reports ----------------------------------------------------------- */

/* Unitary equivalence; a witness unitary is included when want_witness != 0
 * and the shifts are equivalent. Flag: equivalent. */
WSHIFT_API wshift_status wshift_check_equivalent(const wshift_shift *a, const wshift_shift *b,
                                                 double tol, int want_witness,
                                                 wshift_report **out);

/* Reducibility decision; the certificate (unitary, summands) is included
 * when reducible. Flag: reducible. */
WSHIFT_API wshift_status wshift_reduce(const wshift_shift *shift, double tol,
                                       wshift_report **out);

/* Kippenhahn coefficients {n, S_table, radial_coeffs, product}. Flag: 1. */
WSHIFT_API wshift_status wshift_kippenhahn(const wshift_shift *shift, wshift_report **out);

/* Numerical-range equality {equal, S_a, S_b, product_a, product_b}.
 * Flag: equal. */
WSHIFT_API wshift_status wshift_ranges_equal(const wshift_shift *a, const wshift_shift *b,
                                             double tol, wshift_report **out);

/* Support function on m >= 3 equally spaced angles. Flag: 1. */
WSHIFT_API wshift_status wshift_boundary(const wshift_shift *shift, size_t m,
                                         wshift_report **out);

/* Combined single-shift report. Flag: reducible. */
WSHIFT_API wshift_status wshift_analyze(const wshift_shift *shift, double tol,
                                        wshift_report **out);

WSHIFT_API void wshift_report_destroy(wshift_report *report);

/* Primary boolean outcome of the report (see each producer). */
WSHIFT_API int wshift_report_flag(const wshift_report *report);

/* Compact JSON text, owned by the report. */
WSHIFT_API const char *wshift_report_json(const wshift_report *report);

/* Pretty-printed JSON (2-space indent), owned by the report. */
WSHIFT_API const char *wshift_report_json_pretty(const wshift_report *report);

#ifdef __cplusplus
}
#endif

#endif /* WSHIFT_WSHIFT_H */
