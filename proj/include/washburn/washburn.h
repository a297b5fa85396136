#ifndef WASHBURN_H
#define WASHBURN_H

/* C interface to the washburn library. All functions return a wb_status;
 * on failure wb_last_error() describes the problem (per thread).
 * Strings returned through char** are heap-allocated; release with wb_string_free. */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(WASHBURN_BUILDING)
#    define WB_API __declspec(dllexport)
#  else
#    define WB_API __declspec(dllimport)
#  endif
#else
#  define WB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wb_status {
  WB_OK = 0,
  WB_E_DOMAIN = 1,
  WB_E_CONSISTENCY = 2,
  WB_E_SINGULARITY = 3,
  WB_E_STEP_UNDERFLOW = 4,
  WB_E_HORIZON = 5,
  WB_E_NON_CONVERGENCE = 6,
  WB_E_INCONCLUSIVE = 7,
  WB_E_IO = 8,
  WB_E_INTERNAL = 99
} wb_status;

WB_API const char* wb_version(void);
WB_API const char* wb_status_name(wb_status s);
/* Message of the last failed call on this thread ("" if none). */
WB_API const char* wb_last_error(void);
WB_API void wb_string_free(char* s);

/* ---- parameters ---- */

typedef struct wb_physical_params {
  double rho, mu, gamma;
  double theta; /* radians */
  double g, R, L, h0;
} wb_physical_params;

typedef struct wb_model_params {
  double omega, beta, alpha, omega_star;
  int has_scales;
  double h_e, tau, Oh, Bo;
} wb_model_params;

WB_API wb_status wb_model_params_dimensionless(double omega, double beta, double alpha,
                                                wb_model_params* out);
WB_API wb_status wb_nondimensionalize(const wb_physical_params* p, wb_model_params* out);
/* Parses {"rho","mu","gamma","theta_deg","g","R","L","h0"} (theta in degrees). */
WB_API wb_status wb_parse_physical_params(const char* json_text, wb_physical_params* out);
/* JSON object with the parameters, scales and an "advisories" array. */
WB_API wb_status wb_model_params_json(const wb_model_params* m, char** json);
WB_API wb_status wb_critical_omega(double beta, double* out);
WB_API wb_status wb_u_from_H(double H, double* u);
WB_API wb_status wb_H_from_u(double u, double* H);

/* ---- dynamics ---- */

WB_API wb_status wb_rhs_u(double u, double v, double omega, double beta, double epsilon,
                          double* du, double* dv);
WB_API wb_status wb_rhs_H(double H, double Hdot, double omega, double beta, double* Hddot);

/* ---- trajectories ---- */

typedef struct wb_integrate_options {
  double epsilon;
  double horizon; /* 0 selects 30 sqrt(omega)/beta */
  double abs_tol, rel_tol;
  double sample_step;
} wb_integrate_options;

typedef struct wb_sample {
  double s, u, v, H, T, E, V;
} wb_sample;

typedef struct wb_trajectory wb_trajectory;

WB_API void wb_integrate_options_default(wb_integrate_options* opt);
WB_API wb_status wb_integrate(const wb_model_params* m, const wb_integrate_options* opt,
                              wb_trajectory** out);
WB_API wb_status wb_integrate_from(const wb_model_params* m, double u0, double v0,
                                   const wb_integrate_options* opt, wb_trajectory** out);
WB_API void wb_trajectory_free(wb_trajectory* t);
WB_API size_t wb_trajectory_size(const wb_trajectory* t);
WB_API wb_status wb_trajectory_sample(const wb_trajectory* t, size_t i, wb_sample* out);
/* Dense-output state at s in [0, S]. */
WB_API wb_status wb_trajectory_at(const wb_trajectory* t, double s, double* u, double* v);
WB_API size_t wb_trajectory_crossing_count(const wb_trajectory* t);
WB_API wb_status wb_trajectory_write_csv(const wb_trajectory* t, const char* path);
/* Final state, extrema, crossings, step count. */
WB_API wb_status wb_trajectory_summary_json(const wb_trajectory* t, char** json);
/* max_i |a.u_i - b.u_i| on a shared sample grid. */
WB_API wb_status wb_trajectory_distance(const wb_trajectory* a, const wb_trajectory* b, double* out);
/* Monotone / Oscillatory / AtEquilibrium; WB_E_INCONCLUSIVE when undecided. */
WB_API wb_status wb_classify_json(const wb_trajectory* t, char** json);
WB_API wb_status wb_audit_json(const wb_trajectory* t, char** json);
/* 30 / |Re(lambda_slow)|, the horizon used for classification. */
WB_API wb_status wb_settling_horizon(double omega, double beta, double* out);

/* ---- stability ---- */

typedef enum wb_critical_kind {
  WB_STABLE_NODE = 0,
  WB_STABLE_SPIRAL = 1,
  WB_STABLE_INFLECTED_NODE = 2
} wb_critical_kind;

typedef struct wb_stability {
  double lambda1_re, lambda1_im, lambda2_re, lambda2_im;
  wb_critical_kind kind;
  double omega_star, discriminant;
} wb_stability;

typedef struct wb_basin {
  double alpha, C, u_min, u_max;
} wb_basin;

WB_API wb_status wb_linearize(double omega, double beta, wb_stability* out);
WB_API wb_status wb_linearize_json(double omega, double beta, char** json);
WB_API wb_status wb_lyapunov(double u, double v, double* E, double* V);
WB_API wb_status wb_basin_spec(double alpha, wb_basin* out);
WB_API wb_status wb_basin_json(double alpha, char** json);

/* ---- Volterra formulation ---- */

typedef struct wb_picard wb_picard;

typedef struct wb_picard_options {
  double horizon;
  double step; /* 0 selects horizon / 4096 */
  double tol;
  int max_iter;
} wb_picard_options;

WB_API void wb_picard_options_default(wb_picard_options* opt);
WB_API wb_status wb_picard_solve(double omega, double beta, double alpha,
                                 const wb_picard_options* opt, wb_picard** out);
WB_API void wb_picard_free(wb_picard* p);
WB_API size_t wb_picard_size(const wb_picard* p);
WB_API wb_status wb_picard_value(const wb_picard* p, size_t i, double* s, double* u);
WB_API int wb_picard_iterations(const wb_picard* p);
WB_API wb_status wb_picard_write_csv(const wb_picard* p, const char* path);
WB_API wb_status wb_picard_summary_json(const wb_picard* p, char** json);

/* ---- reduced regimes ---- */

typedef struct wb_regime wb_regime;

typedef struct wb_regime_options {
  double alpha;
  double horizon;
  double sample_step;
  double case3_b;
  double abs_tol, rel_tol;
} wb_regime_options;

WB_API void wb_regime_options_default(wb_regime_options* opt);
/* Accepts "1".."4" or the case names. */
WB_API wb_status wb_regime_case_from_string(const char* name, int* case_id);
WB_API wb_status wb_regime_run(int case_id, double beta, const wb_regime_options* opt, wb_regime** out);
WB_API void wb_regime_free(wb_regime* r);
WB_API size_t wb_regime_size(const wb_regime* r);
WB_API double wb_regime_max_residual(const wb_regime* r);
WB_API wb_status wb_regime_write_csv(const wb_regime* r, const char* path);
WB_API wb_status wb_regime_summary_json(const wb_regime* r, char** json);
/* JSON with (a, b) or the Case 3 family descriptor. */
WB_API wb_status wb_regime_exponents_json(int case_id, char** json);

/* ---- plotting ---- */

/* gnuplot script plotting column ycol against xcol of a CSV file;
 * reference_level draws a dashed horizontal line unless it is NaN. */
WB_API wb_status wb_gnuplot_script(const char* csv_path, const char* title, int xcol, int ycol,
                                   const char* xlabel, const char* ylabel, double reference_level,
                                   char** script);

/* ---- verification ---- */

typedef double (*wb_critical_omega_fn)(double beta, void* user);

/* Runs every suite whose name contains `only` (NULL or "" for all).
 * *all_passed is 1 iff every selected suite passed. */
WB_API wb_status wb_verify(const char* only, int parallel, char** report_json, int* all_passed);
/* Same, with the critical-omega oracle replaced by `fn`. */
WB_API wb_status wb_verify_with_oracle(const char* only, int parallel, wb_critical_omega_fn fn,
                                       void* user, char** report_json, int* all_passed);
/* Names of all suites, newline separated. */
WB_API wb_status wb_verify_suite_names(char** names);

#ifdef __cplusplus
}
#endif

#endif
