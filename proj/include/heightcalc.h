#ifndef HEIGHTCALC_H
#define HEIGHTCALC_H

/*
 * C interface to the height calculator.
 *
 * All functions return hc_status; results come back through out-parameters.
 * Objects are opaque handles released with the matching _free function.
 * Strings returned through char** out-parameters are heap-allocated and must
 * be released with hc_string_free.  On failure, hc_last_error() returns a
 * thread-local description of the most recent error.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hc_status {
  HC_OK = 0,
  HC_ERROR_DOMAIN = 1,   /* input outside the defined range of a formula */
  HC_ERROR_VERIFY = 2,   /* an internal consistency check failed */
  HC_ERROR_ARGUMENT = 3, /* malformed argument (parse error, null pointer) */
  HC_ERROR_INTERNAL = 4
} hc_status;

typedef enum hc_route {
  HC_ROUTE_MINUS_ONE = 0, /* zeta data at s = -1 */
  HC_ROUTE_TWO = 1        /* zeta data at s = 2 */
} hc_route;

typedef enum hc_algebra {
  HC_ALGEBRA_MATRIX = 0,
  HC_ALGEBRA_DIVISION = 1
} hc_algebra;

typedef struct hc_field hc_field;
typedef struct hc_ramset hc_ramset;
typedef struct hc_height hc_height;
typedef struct hc_report hc_report;

/* Thread-local message for the most recent failing call; never NULL. */
const char *hc_last_error(void);

void hc_string_free(char *s);

/* ------------------------------------------------------------------ */
/* Base fields: "Q" or "Q(sqrt D)" with D > 1 squarefree.              */

hc_status hc_field_parse(const char *text, hc_field **out);
void hc_field_free(hc_field *f);
hc_status hc_field_degree(const hc_field *f, int *out);
hc_status hc_field_discriminant(const hc_field *f, long long *out);
/* Class number defaults to 1; override for exact degree computations. */
hc_status hc_field_set_class_number(hc_field *f, long long h);
hc_status hc_field_render(const hc_field *f, char **out);

/* ------------------------------------------------------------------ */
/* Ramification sets: comma-separated "p" or "p:sel", sel in           */
/* {split1, split2, inert, ram}.                                       */

hc_status hc_ramset_parse(const hc_field *f, const char *text, hc_ramset **out);
void hc_ramset_free(hc_ramset *s);
hc_status hc_ramset_size(const hc_ramset *s, size_t *out);
hc_status hc_ramset_discriminant(const hc_ramset *s, long long *out);
hc_status hc_ramset_render(const hc_ramset *s, char **out);

/* ------------------------------------------------------------------ */
/* Heights.                                                            */

/* Modular height of the curve attached to (field, ramset); requires
 * |ramset| + degree odd.  The ramset must come from the same field. */
hc_status hc_modular_height(const hc_field *f, const hc_ramset *s, hc_route route,
                            hc_height **out);
/* Hodge-normalized height over Q for an even ramification set. */
hc_status hc_kry_height(const hc_field *f, const hc_ramset *s, hc_height **out);

void hc_height_free(hc_height *h);
hc_status hc_height_value(const hc_height *h, double *out);
hc_status hc_height_term_count(const hc_height *h, size_t *out);
hc_status hc_height_term_label(const hc_height *h, size_t i, char **out);
hc_status hc_height_term_value(const hc_height *h, size_t i, double *out);

/* CM point height: d_e < 0 a fundamental discriminant, d_b >= 1 the
 * reduced discriminant of the quaternion algebra. */
hc_status hc_cm_height_from_disc(long long d_e, long long d_b, double *out);
/* Same with a caller-supplied L'(0)/L(0) and |d_E/F|. */
hc_status hc_cm_height_supplied(double l_ratio, double d_b, double d_ef, double *out);

/* Exact degree of the Hodge bundle: value as decimal string + double. */
hc_status hc_vigneras_degree(const hc_field *f, const hc_ramset *s, char **exact,
                             double *approx);

/* ------------------------------------------------------------------ */
/* Local Whittaker values and zeta data.                               */

/* Value at integer s >= 1 of the local Whittaker function at a place of
 * residue norm N (prime), different valuation delta, parameter valuation r.
 * exact receives a closed-form string (c * sqrt(N)^e); either out may be
 * NULL. */
hc_status hc_local_whittaker(long long N, int delta, int r, hc_algebra algebra,
                             long s, char **exact, double *approx);

/* zeta'_F / zeta_F at s = -1 or s = 2 per route. */
hc_status hc_zeta_log_deriv(const hc_field *f, hc_route route, double *out);
/* Exact zeta_F(-1) as a decimal string + double. */
hc_status hc_zeta_value_at_minus1(const hc_field *f, char **exact, double *approx);
/* L'(0)/L(0) for the quadratic character of fundamental discriminant d < 0. */
hc_status hc_quad_l_log_deriv_at0(long long d, double *out);

/* ------------------------------------------------------------------ */
/* Verification suites.                                                */

/* suite in {"local-oracle", "local-identities", "archimedean", "global",
 * "all"}; thorough widens the parameter grid. */
hc_status hc_verify_run(const char *suite, int thorough, hc_report **out);
void hc_report_free(hc_report *r);
hc_status hc_report_overall(const hc_report *r, int *out);
hc_status hc_report_check_count(const hc_report *r, size_t *total, size_t *passed);
hc_status hc_report_json(const hc_report *r, char **out);

#ifdef __cplusplus
}
#endif

#endif /* HEIGHTCALC_H */
