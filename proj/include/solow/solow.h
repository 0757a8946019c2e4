/*
 * C interface to the Solow-Swan series/oracle library.
 *
 * Objects are opaque handles created by the create, build and run functions and
 * released with the matching destroy function. Every fallible call returns a
 * solow_status; on failure solow_last_error() describes the problem for the
 * calling thread. Strings returned through char** are heap allocated and
 * must be released with solow_string_free.
 */
#ifndef SOLOW_SOLOW_H
#define SOLOW_SOLOW_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(SOLOW_BUILDING_LIBRARY)
#    define SOLOW_API __declspec(dllexport)
#  else
#    define SOLOW_API __declspec(dllimport)
#  endif
#else
#  define SOLOW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum solow_status {
    SOLOW_OK = 0,
    SOLOW_ERR_INVALID_ARGUMENT = 1, /* parameter or configuration invariant violated */
    SOLOW_ERR_DOMAIN = 2,           /* argument outside a function's domain */
    SOLOW_ERR_SOLVER = 3,           /* numerical solver failure */
    SOLOW_ERR_PARSE = 4,            /* malformed config or CSV, unreadable file */
    SOLOW_ERR_NULL_POINTER = 5,
    SOLOW_ERR_OUT_OF_RANGE = 6,     /* index past the end of a handle's data */
    SOLOW_ERR_INTERNAL = 99
} solow_status;

typedef enum solow_method {
    SOLOW_METHOD_SERIES = 0,
    SOLOW_METHOD_ABM = 1,
    SOLOW_METHOD_EXACT = 2,
    SOLOW_METHOD_BOTH = 3
} solow_method;

typedef enum solow_stability {
    SOLOW_UNSTABLE = 0,
    SOLOW_ASYMPTOTICALLY_STABLE = 1
} solow_stability;

typedef struct solow_params {
    double p;
    double q;
    double mu;
    double alpha;
    double k0;
} solow_params;

typedef struct solow_equilibrium_report {
    double k_zero;
    solow_stability k_zero_stability;
    double derivative_at_zero; /* +inf */
    double k_star;
    solow_stability k_star_stability;
    double derivative_at_star;
    double rhs_at_star;
    double inflection_k;
    double rhs_max;
} solow_equilibrium_report;

typedef struct solow_compare_result {
    double max_relative_gap;
    double t_at_max;
    size_t trusted_points;
    size_t total_points;
    solow_method oracle; /* SOLOW_METHOD_EXACT or SOLOW_METHOD_ABM */
} solow_compare_result;

typedef struct solow_series solow_series;
typedef struct solow_trajectory solow_trajectory;
typedef struct solow_sweep_config solow_sweep_config;
typedef struct solow_sweep_grid solow_sweep_grid;
typedef struct solow_verify_report solow_verify_report;

SOLOW_API const char* solow_version(void);
SOLOW_API const char* solow_last_error(void);
SOLOW_API const char* solow_status_string(solow_status status);
SOLOW_API void solow_string_free(char* s);

SOLOW_API solow_params solow_reference_params(void);
SOLOW_API solow_status solow_params_validate(const solow_params* params);
SOLOW_API solow_status solow_parse_method(const char* name, solow_method* out);

/* Special functions */
SOLOW_API solow_status solow_ln_gamma(double x, double* out);
SOLOW_API solow_status solow_mittag_leffler(double alpha, double z, double* out);

/* Series solution */
SOLOW_API solow_status solow_series_build(const solow_params* params, int order, solow_series** out);
SOLOW_API void solow_series_destroy(solow_series* series);
SOLOW_API int solow_series_order(const solow_series* series);
/* Copies min(len, order + 1) coefficients. */
SOLOW_API solow_status solow_series_coeffs(const solow_series* series, double* out, size_t len);
SOLOW_API solow_status solow_series_eval(const solow_series* series, double t, double* value, int* trusted);

/* Trajectories: method must be SERIES, ABM or EXACT. */
SOLOW_API solow_status solow_solve(const solow_params* params, solow_method method, double t_max, int samples,
                                   int order, solow_trajectory** out);
SOLOW_API void solow_trajectory_destroy(solow_trajectory* traj);
SOLOW_API size_t solow_trajectory_size(const solow_trajectory* traj);
SOLOW_API const char* solow_trajectory_method(const solow_trajectory* traj);
SOLOW_API solow_status solow_trajectory_point(const solow_trajectory* traj, size_t index, double* t, double* k,
                                              int* trusted);

SOLOW_API solow_status solow_compare(const solow_params* params, double t_max, int samples, int order,
                                     solow_compare_result* out);

/* Equilibria */
SOLOW_API solow_status solow_find_equilibria(const solow_params* params, solow_equilibrium_report* out);
SOLOW_API solow_status solow_equilibria_json(const solow_params* params, char** out);
SOLOW_API solow_status solow_equilibria_table(const solow_params* params, char** out);
SOLOW_API solow_status solow_balanced_growth_capital(const solow_params* params, double L0, double psi, double t,
                                                     double* capital, int* near_equilibrium);

/* Sweeps */
SOLOW_API solow_status solow_sweep_config_create(solow_sweep_config** out);
SOLOW_API solow_status solow_sweep_config_preset(const char* name, solow_sweep_config** out);
SOLOW_API void solow_sweep_config_destroy(solow_sweep_config* config);
/* Applies key=value lines from a file on top of the current values. */
SOLOW_API solow_status solow_sweep_config_load(solow_sweep_config* config, const char* path);
SOLOW_API solow_status solow_sweep_config_set(solow_sweep_config* config, const char* key, const char* value);
SOLOW_API solow_status solow_sweep_config_validate(const solow_sweep_config* config);
SOLOW_API solow_status solow_sweep_config_render(const solow_sweep_config* config, char** out);
SOLOW_API size_t solow_preset_count(void);
SOLOW_API const char* solow_preset_name(size_t index);

SOLOW_API solow_status solow_sweep_run(const solow_sweep_config* config, unsigned threads, solow_sweep_grid** out);
SOLOW_API void solow_sweep_grid_destroy(solow_sweep_grid* grid);
SOLOW_API size_t solow_sweep_grid_rows(const solow_sweep_grid* grid);
SOLOW_API solow_status solow_sweep_grid_row(const solow_sweep_grid* grid, size_t index, double* t, double* axis,
                                            double* k, int* trusted, const char** method);
SOLOW_API solow_status solow_sweep_grid_csv(const solow_sweep_grid* grid, char** out);
/* Writes the CSV to path and run metadata to path + ".meta.json". */
SOLOW_API solow_status solow_sweep_grid_write(const solow_sweep_grid* grid, const char* path, unsigned threads);
SOLOW_API solow_status solow_sweep_gnuplot_script(const solow_sweep_config* config, const char* csv_path,
                                                  char** out);

/* Transform identity verification. tolerance < 0 keeps the built-in tolerances. */
SOLOW_API solow_status solow_verify_run(double tolerance, solow_verify_report** out);
SOLOW_API void solow_verify_report_destroy(solow_verify_report* report);
SOLOW_API int solow_verify_passed(const solow_verify_report* report);
SOLOW_API solow_status solow_verify_table(const solow_verify_report* report, char** out);
SOLOW_API solow_status solow_verify_failures(const solow_verify_report* report, char** out);

#ifdef __cplusplus
}
#endif

#endif /* SOLOW_SOLOW_H */
