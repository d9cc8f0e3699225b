#ifndef HRSURF_H
#define HRSURF_H

/* C interface to the hrsurf library: constant higher-order mean curvature
 * hypersurfaces in hyperbolic-space cross line products, presented as graphs.
 *
 * Every fallible call returns an hrs_status; 0 is success.  On failure the
 * thread-local message behind hrs_last_error() describes what went wrong and
 * no output parameter is written.  Handles are created and released in
 * matching pairs (hrs_profile_* / hrs_sample_*).
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define HRS_API __declspec(dllexport)
#else
#define HRS_API __attribute__((visibility("default")))
#endif

typedef enum hrs_status {
  HRS_OK = 0,
  HRS_ERROR = 1,            /* unexpected failure */
  HRS_INVALID_ARGUMENT = 2, /* parameter outside its documented range */
  HRS_DOMAIN = 3,           /* input outside the mathematical domain */
  HRS_NUMERIC = 4,          /* tolerance or iteration budget exhausted */
  HRS_IO = 5                /* file could not be read or written */
} hrs_status;

HRS_API const char* hrs_status_name(int status);
HRS_API const char* hrs_last_error(void);
HRS_API int hrs_abi_version(void);

/* Shortest round-trip decimal form of x (what the file writers use); returns
 * the number of characters written, or -1 if cap is too small. */
HRS_API int hrs_format_double(double x, char* buf, size_t cap);

/* ---- rotational scalar queries ------------------------------------- */

/* entire/compact threshold (n-r)/n */
HRS_API int hrs_threshold(int n, int r, double* out);

/* out_compact = 1 for a compact sphere, 0 for an entire graph (hr vs
 * threshold; the _rational form decides in exact integer arithmetic) */
HRS_API int hrs_classify(int n, int r, double hr, int* out_compact);
HRS_API int hrs_classify_rational(int n, int r, long long num, long long den,
                                  int* out_compact);
HRS_API const char* hrs_classification_name(int is_compact);

/* I(xi) = integral of sinh^{n-1}/cosh^{r-1} over [0, xi] */
HRS_API int hrs_rotational_integral(int n, int r, double xi, double* out);

/* first-integral pair p = (n hr I + d)^{2/r}, q = sinh^{2(n-r)/r} - p */
HRS_API int hrs_pq(int n, int r, double hr, double d, double xi, double* p, double* q);

/* closing radius of the compact profile (first positive zero of q, d = 0) */
HRS_API int hrs_rho0(int n, int r, double hr, double* out);

/* profile value and derivatives at one radius (d = 0) */
HRS_API int hrs_lambda(int n, int r, double hr, double rho, double* out);
HRS_API int hrs_dlambda(int n, int r, double hr, double rho, double* out);
HRS_API int hrs_ddlambda(int n, int r, double hr, double rho, double* out);

/* ---- barrier constants ---------------------------------------------- */

/* height / slope of the critical (hr = (n-r)/n) entire graph over a ball of
 * hyperbolic radius R; requires n > r */
HRS_API int hrs_height_bound(int n, int r, double R, double* out);
HRS_API int hrs_gradient_bound(int n, int r, double R, double* out);

/* ---- translational / screw closed forms ----------------------------- */

/* slope constant c of the entire graph lambda = c ln y with H_2 = k in
 * dimension n >= 3; requires 0 < k < (n-2)/n */
HRS_API int hrs_entire_log_slope(int n, double k, double* out);

/* ---- profile tables -------------------------------------------------- */

typedef struct hrs_profile hrs_profile;

HRS_API int hrs_profile_rotational(int n, int r, double hr, int samples, double rho_max,
                                   hrs_profile** out);
HRS_API int hrs_profile_parabolic_minimal(int n, int r, double c, int samples,
                                          hrs_profile** out);
HRS_API int hrs_profile_screw_flat(double c, double l, int samples, hrs_profile** out);
/* pass has_psi0 = 0 to start from the conserved value d instead */
HRS_API int hrs_profile_screw_ode(int n, double s2, double l, double d, int has_psi0,
                                  double psi0, double y0, double y1, int steps,
                                  hrs_profile** out);

HRS_API int hrs_profile_read(const char* path, hrs_profile** out);
/* .json writes JSON, anything else CSV */
HRS_API int hrs_profile_write(const hrs_profile* p, const char* path);
/* triangulated surface of revolution (rotational profiles only); closed != 0
 * doubles a compact profile across its equator */
HRS_API int hrs_profile_write_mesh(const hrs_profile* p, const char* path, int segments,
                                   int closed);
/* (rho, t) polyline around the doubled compact curve */
HRS_API int hrs_profile_write_closed_path(const hrs_profile* p, const char* path);

HRS_API int hrs_profile_rows(const hrs_profile* p);
HRS_API int hrs_profile_row(const hrs_profile* p, int i, double* param, double* lambda,
                            double* dlambda, double* ddlambda);
HRS_API const char* hrs_profile_family(const hrs_profile* p);
/* any output pointer may be NULL */
HRS_API int hrs_profile_meta(const hrs_profile* p, int* n, int* r, double* target,
                             int* target_is_hr, double* domain_a, double* domain_b,
                             int* endpoint_singular, int* truncated);

/* re-derive the declared constant row by row; outputs may be NULL */
HRS_API int hrs_profile_verify(const hrs_profile* p, double* max_abs_residual,
                               double* rms_residual);

/* gluing height t0 = lambda(rho0) of a compact rotational profile */
HRS_API int hrs_profile_gluing_height(const hrs_profile* p, double* t0);

HRS_API void hrs_profile_free(hrs_profile* p);

/* ---- sampled graphs -------------------------------------------------- */

typedef struct hrs_sample hrs_sample;

HRS_API int hrs_sample_read(const char* path, hrs_sample** out);
HRS_API void hrs_sample_free(hrs_sample* s);

/* residual of the flux identity for (r+1) S_{r+1} on the sampled graph */
HRS_API int hrs_divergence_residual(const hrs_sample* s, int r, double* max_abs_residual,
                                    double* rms_residual);

#ifdef __cplusplus
}
#endif

#endif /* HRSURF_H */
