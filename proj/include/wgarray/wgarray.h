// Copyright 2026 The wgarray Authors
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
 * C interface to the wgarray simulator: chi(2) waveguide arrays, Bogoliubov
 * propagation, lossy moment evolution and continuous-variable entanglement
 * witnesses.
 *
 * Conventions:
 *  - Every function returns a wga_status; results come back via out-params.
 *  - On failure, wga_last_error() returns a thread-local message describing it.
 *  - Objects are opaque handles, created by wga_*_create / producer functions
 *    and released with the matching wga_*_destroy. Destroy functions accept NULL.
 *  - Mode indices are 1-based.
 *  - Complex matrices are written row-major as interleaved (re, im) doubles,
 *    i.e. 2*N*N doubles for an N x N matrix.
 *  - Strings returned through char** are heap-allocated; free with wga_string_free.
 */
#ifndef WGARRAY_H
#define WGARRAY_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(WGARRAY_BUILDING)
#    define WGA_API __declspec(dllexport)
#  else
#    define WGA_API __declspec(dllimport)
#  endif
#else
#  define WGA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wga_status {
  WGA_OK = 0,
  WGA_ERR_INTERNAL = 1,
  WGA_ERR_VALIDATION = 2,
  WGA_ERR_NUMERICAL = 3
} wga_status;

typedef enum wga_format {
  WGA_FORMAT_DEFAULT = 0, /* whatever the scenario file asks for */
  WGA_FORMAT_CSV = 1,
  WGA_FORMAT_JSON = 2
} wga_format;

typedef struct wga_config wga_config;
typedef struct wga_propagator wga_propagator;
typedef struct wga_state wga_state;
typedef struct wga_scenario wga_scenario;

typedef struct wga_run_options {
  wga_format format;
  double tol; /* integrator tolerance; <= 0 selects the default 1e-10 */
} wga_run_options;

WGA_API const char* wga_version(void);
WGA_API const char* wga_last_error(void);
WGA_API void wga_string_free(char* s);

/* ---- array configuration ---------------------------------------------- */

/* pump_gains has n_modes entries, link_couplings n_modes - 1 (may be NULL when n_modes == 1). */
WGA_API wga_status wga_config_create(int n_modes, const double* pump_gains,
                                     const double* link_couplings, double loss_rate,
                                     double pump_phase, wga_config** out);
WGA_API void wga_config_destroy(wga_config* config);
WGA_API int wga_config_n_modes(const wga_config* config);

/* ---- lossless propagator ---------------------------------------------- */

WGA_API wga_status wga_propagate(const wga_config* config, double t, wga_propagator** out);
WGA_API void wga_propagator_destroy(wga_propagator* p);
/* a_out and b_out each receive 2*N*N doubles; either may be NULL. */
WGA_API wga_status wga_propagator_matrices(const wga_propagator* p, double* a_out,
                                           double* b_out);
WGA_API wga_status wga_propagator_residuals(const wga_propagator* p, double* commutator,
                                            double* symmetry);

/* ---- moment states ---------------------------------------------------- */

WGA_API wga_status wga_state_vacuum(int n_modes, wga_state** out);
WGA_API wga_status wga_state_coherent(int n_modes, int site, double amplitude_re,
                                      double amplitude_im, wga_state** out);
WGA_API void wga_state_destroy(wga_state* state);
WGA_API int wga_state_n_modes(const wga_state* state);
WGA_API double wga_state_time(const wga_state* state);

/* Integrates the lossy moment equations from the state's time to t. tol <= 0 selects the default. */
WGA_API wga_status wga_evolve(const wga_config* config, const wga_state* state, double t,
                              double tol, wga_state** out);

/* normal_out / anomalous_out receive 2*N*N doubles, alpha_out 2*N; any may be NULL. */
WGA_API wga_status wga_state_moments(const wga_state* state, double* alpha_out,
                                     double* normal_out, double* anomalous_out);

/* ---- observables ------------------------------------------------------ */

/* out receives N doubles. */
WGA_API wga_status wga_intensities(const wga_state* state, double* out);
/* out receives (2N)*(2N) doubles, row-major, ordering (q_1..q_N, p_1..p_N). */
WGA_API wga_status wga_covariance(const wga_state* state, double phase, double* out);
/* out receives N doubles, ascending. */
WGA_API wga_status wga_symplectic_eigenvalues(const wga_state* state, double phase, double* out);
WGA_API wga_status wga_duan(const wga_state* state, int j, int k, double phase, double* out);
WGA_API wga_status wga_vlf(const wga_state* state, int i, int j, int k, double phase,
                           double* out);

/* ---- closed forms ----------------------------------------------------- */

WGA_API double wga_duan_closed_form(double g, double J, double t);
WGA_API wga_status wga_bessel_j(int order, double x, double* out);

/* ---- scenarios -------------------------------------------------------- */

WGA_API wga_status wga_scenario_parse(const char* text, wga_scenario** out);
WGA_API void wga_scenario_destroy(wga_scenario* scenario);
WGA_API wga_status wga_scenario_emit(const wga_scenario* scenario, char** out);
/* Output path requested by the scenario file; empty string means standard output. */
WGA_API const char* wga_scenario_output_path(const wga_scenario* scenario);

/* options may be NULL. The rendered CSV or JSON document is returned in *out. */
WGA_API wga_status wga_scenario_run(const wga_scenario* scenario,
                                    const wga_run_options* options, char** out);
WGA_API wga_status wga_figure_run(const char* figure_id, const wga_run_options* options,
                                  char** out);
/* axes are strings of the form "name=start:stop:count". */
WGA_API wga_status wga_sweep_run(const wga_scenario* scenario, const char* const* axes,
                                 size_t n_axes, const wga_run_options* options, char** out);

#ifdef __cplusplus
}
#endif

#endif /* WGARRAY_H */
