#ifndef CGEO_CGEO_H
#define CGEO_CGEO_H

/*
 * C interface to the conformal geodesic library.
 *
 * Objects are opaque handles created and destroyed through this API. Every
 * fallible call returns a cgeo_status; on failure the message for the calling
 * thread is available from cgeo_last_error() until the next failing call.
 * Arrays are passed as (pointer, length) pairs with length equal to the chart
 * dimension unless stated otherwise.
 */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(CGEO_BUILDING)
#    define CGEO_API __declspec(dllexport)
#  else
#    define CGEO_API __declspec(dllimport)
#  endif
#else
#  define CGEO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define CGEO_MAX_DIM 8

typedef enum cgeo_status {
  CGEO_OK = 0,
  CGEO_ERR_ARGUMENT = 1,
  CGEO_ERR_DOMAIN = 2,
  CGEO_ERR_UNSUPPORTED_DIMENSION = 3,
  CGEO_ERR_DEGENERATE_VELOCITY = 4,
  CGEO_ERR_CONSTRAINT_DRIFT = 5,
  CGEO_ERR_POLE = 6,
  CGEO_ERR_OUT_OF_RANGE = 7,
  CGEO_ERR_CONFIG = 8,
  CGEO_ERR_INTERNAL = 99
} cgeo_status;

typedef enum cgeo_formulation {
  CGEO_FORM_A = 0,
  CGEO_FORM_B = 1,
  CGEO_FORM_C = 2
} cgeo_formulation;

typedef enum cgeo_termination {
  CGEO_COMPLETED = 0,
  CGEO_ACCELERATION_BLOWUP = 1,
  CGEO_PARAMETER_BLOWUP = 2,
  CGEO_LEFT_DOMAIN = 3,
  CGEO_STEP_UNDERFLOW = 4
} cgeo_termination;

typedef enum cgeo_format {
  CGEO_FORMAT_DEFAULT = 0,
  CGEO_FORMAT_CSV = 1,
  CGEO_FORMAT_JSON = 2
} cgeo_format;

CGEO_API const char* cgeo_version(void);
CGEO_API const char* cgeo_last_error(void);
CGEO_API const char* cgeo_status_name(cgeo_status status);

/* Release a string returned through a char** out parameter. */
CGEO_API void cgeo_string_free(char* s);

/* ---- metric fields ---------------------------------------------------- */

typedef struct cgeo_metric cgeo_metric;

CGEO_API cgeo_status cgeo_metric_euclidean(int dim, cgeo_metric** out);
CGEO_API cgeo_status cgeo_metric_round_sphere(int dim, cgeo_metric** out);
/* The "metric" section of an experiment configuration, as a JSON object. */
CGEO_API cgeo_status cgeo_metric_from_json(const char* json, cgeo_metric** out);
CGEO_API void cgeo_metric_destroy(cgeo_metric* m);
CGEO_API int cgeo_metric_dimension(const cgeo_metric* m);
/* Writes the dim x dim metric row-major into g_out (dim*dim entries). */
CGEO_API cgeo_status cgeo_metric_at(const cgeo_metric* m, const double* x, size_t dim,
                                    double* g_out);

/* All matrices row-major with stride CGEO_MAX_DIM; christoffel[a][b][c] = Gamma^a_bc. */
typedef struct cgeo_curvature {
  int dim;
  double metric[CGEO_MAX_DIM][CGEO_MAX_DIM];
  double metric_inverse[CGEO_MAX_DIM][CGEO_MAX_DIM];
  double christoffel[CGEO_MAX_DIM][CGEO_MAX_DIM][CGEO_MAX_DIM];
  double ricci[CGEO_MAX_DIM][CGEO_MAX_DIM];
  double scalar;
  double schouten[CGEO_MAX_DIM][CGEO_MAX_DIM];
  double schouten_mixed[CGEO_MAX_DIM][CGEO_MAX_DIM];
} cgeo_curvature;

CGEO_API cgeo_status cgeo_curvature_at(const cgeo_metric* m, const double* x, size_t dim,
                                       cgeo_curvature* out);

/* ---- integration ------------------------------------------------------- */

typedef struct cgeo_step_control {
  double rtol;
  double atol;
  double initial_step;
  double min_step;
  double max_step; /* <= 0: unbounded */
  double accel_blowup;
  double position_blowup;
  double param_blowup;
  long max_steps;
} cgeo_step_control;

CGEO_API cgeo_step_control cgeo_step_control_default(void);

typedef struct cgeo_state {
  cgeo_formulation form;
  int dim;
  double x[CGEO_MAX_DIM];
  double vel[CGEO_MAX_DIM];
  double acc[CGEO_MAX_DIM];
  double param;
} cgeo_state;

typedef struct cgeo_trajectory cgeo_trajectory;

/* ctrl may be NULL for the defaults. */
CGEO_API cgeo_status cgeo_integrate(const cgeo_metric* m, const cgeo_state* init, double param_end,
                                    const cgeo_step_control* ctrl, cgeo_trajectory** out);
CGEO_API void cgeo_trajectory_destroy(cgeo_trajectory* t);
CGEO_API size_t cgeo_trajectory_size(const cgeo_trajectory* t);
CGEO_API cgeo_status cgeo_trajectory_sample(const cgeo_trajectory* t, size_t i, cgeo_state* out);
CGEO_API cgeo_termination cgeo_trajectory_termination(const cgeo_trajectory* t);
CGEO_API const char* cgeo_termination_name(cgeo_termination t);
/* Interpolated position at a parameter inside the integrated range. */
CGEO_API cgeo_status cgeo_trajectory_position_at(const cgeo_trajectory* t, double param,
                                                 double* x_out, size_t dim);
/* CSV or JSON text; free with cgeo_string_free. */
CGEO_API cgeo_status cgeo_trajectory_write(const cgeo_trajectory* t, cgeo_format format,
                                           char** out);

/* ---- Euclidean closed forms ------------------------------------------- */

CGEO_API cgeo_status cgeo_eval_circle(double alpha, double beta, double tau, double* x_out,
                                      size_t dim);
CGEO_API cgeo_status cgeo_circle_center_radius(double alpha, double beta, double* center_out,
                                               size_t dim, double* radius_out);
CGEO_API cgeo_status cgeo_line_param(double alpha, double tau, double* out);
CGEO_API cgeo_status cgeo_limit_point(double alpha, double beta, double* x_out, size_t dim);
CGEO_API cgeo_status cgeo_endpoint_sigma(double alpha, double sigma, double* x_out, size_t dim);

/* ---- stereographic chart ---------------------------------------------- */

/* p_out has dim + 1 entries. */
CGEO_API cgeo_status cgeo_to_sphere(const double* x, size_t dim, double* p_out);
CGEO_API cgeo_status cgeo_from_sphere(const double* p, size_t dim, double* x_out);
CGEO_API cgeo_status cgeo_conformal_factor(const double* x, size_t dim, double* out);

/* ---- experiment commands ----------------------------------------------- */

typedef struct cgeo_run_options {
  cgeo_format format;       /* overrides output.format unless DEFAULT */
  double default_tolerance; /* replaces the rtol/atol defaults when > 0 */
} cgeo_run_options;

typedef struct cgeo_output cgeo_output;

/*
 * Runs "curvature", "integrate", "cone" or "invariance" on a JSON
 * configuration. Returns CGEO_OK whenever *out was produced; the command's own
 * outcome is cgeo_output_exit_code (0 ok, 1 failure, 2 invalid configuration,
 * 3 unsupported dimension, 4 blowup, 5 tolerance exceeded). options may be NULL.
 */
CGEO_API cgeo_status cgeo_run(const char* command, const char* config_json,
                              const cgeo_run_options* options, cgeo_output** out);
CGEO_API int cgeo_output_exit_code(const cgeo_output* o);
CGEO_API const char* cgeo_output_text(const cgeo_output* o);
CGEO_API const char* cgeo_output_message(const cgeo_output* o);
/* output.path from the configuration, "" when absent. */
CGEO_API const char* cgeo_output_path(const cgeo_output* o);
CGEO_API void cgeo_output_destroy(cgeo_output* o);

#ifdef __cplusplus
}
#endif

#endif /* CGEO_CGEO_H */
