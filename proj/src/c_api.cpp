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


#include "wgarray/wgarray.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "wgarray/error.hpp"
#include "wgarray/observables.hpp"
#include "wgarray/oracles.hpp"
#include "wgarray/propagator.hpp"
#include "wgarray/scenario.hpp"

struct wga_config {
  wga::ArrayConfig value;
};
struct wga_propagator {
  wga::BogoliubovPropagator value;
};
struct wga_state {
  wga::MomentState value;
};
struct wga_scenario {
  wga::ScenarioSpec value;
};

namespace {

thread_local std::string last_error;

template <typename F>
wga_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return WGA_OK;
  } catch (const wga::ValidationError& e) {
    last_error = e.what();
    return WGA_ERR_VALIDATION;
  } catch (const wga::NumericalError& e) {
    last_error = e.what();
    return WGA_ERR_NUMERICAL;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return WGA_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return WGA_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return WGA_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw wga::ValidationError(std::string(what) + " is NULL");
}

void write_complex(const wga::ComplexMatrix& m, double* out) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      *out++ = m(r, c).real();
      *out++ = m(r, c).imag();
    }
  }
}

char* duplicate(const std::string& s) {
  auto* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

wga::RunOptions run_options(const wga_run_options* options) {
  wga::RunOptions r;
  if (options != nullptr && options->tol > 0.0) r.tol = options->tol;
  return r;
}

wga::OutputFormat pick_format(const wga_run_options* options, wga::OutputFormat fallback) {
  if (options == nullptr) return fallback;
  switch (options->format) {
    case WGA_FORMAT_CSV:
      return wga::OutputFormat::csv;
    case WGA_FORMAT_JSON:
      return wga::OutputFormat::json;
    default:
      return fallback;
  }
}

}  // namespace

extern "C" {

const char* wga_version(void) { return "1.0.0"; }

const char* wga_last_error(void) { return last_error.c_str(); }

void wga_string_free(char* s) { std::free(s); }

wga_status wga_config_create(int n_modes, const double* pump_gains,
                             const double* link_couplings, double loss_rate, double pump_phase,
                             wga_config** out) {
  return guarded([&] {
    require(out, "out");
    if (n_modes < 1) throw wga::ValidationError("n_modes must be >= 1");
    require(pump_gains, "pump_gains");
    if (n_modes > 1) require(link_couplings, "link_couplings");
    wga::ArrayConfig c;
    c.n_modes = n_modes;
    c.pump_gains.assign(pump_gains, pump_gains + n_modes);
    if (n_modes > 1) c.link_couplings.assign(link_couplings, link_couplings + n_modes - 1);
    c.loss_rate = loss_rate;
    c.pump_phase = pump_phase;
    wga::validate(c);
    *out = new wga_config{std::move(c)};
  });
}

void wga_config_destroy(wga_config* config) { delete config; }

int wga_config_n_modes(const wga_config* config) {
  return config == nullptr ? 0 : config->value.n_modes;
}

wga_status wga_propagate(const wga_config* config, double t, wga_propagator** out) {
  return guarded([&] {
    require(config, "config");
    require(out, "out");
    *out = new wga_propagator{wga::propagate(config->value, t)};
  });
}

void wga_propagator_destroy(wga_propagator* p) { delete p; }

wga_status wga_propagator_matrices(const wga_propagator* p, double* a_out, double* b_out) {
  return guarded([&] {
    require(p, "propagator");
    if (a_out != nullptr) write_complex(p->value.a_matrix, a_out);
    if (b_out != nullptr) write_complex(p->value.b_matrix, b_out);
  });
}

wga_status wga_propagator_residuals(const wga_propagator* p, double* commutator,
                                    double* symmetry) {
  return guarded([&] {
    require(p, "propagator");
    const auto r = wga::symplectic_residual(p->value);
    if (commutator != nullptr) *commutator = r.commutator;
    if (symmetry != nullptr) *symmetry = r.symmetry;
  });
}

wga_status wga_state_vacuum(int n_modes, wga_state** out) {
  return guarded([&] {
    require(out, "out");
    *out = new wga_state{wga::vacuum_state(n_modes)};
  });
}

wga_status wga_state_coherent(int n_modes, int site, double amplitude_re, double amplitude_im,
                              wga_state** out) {
  return guarded([&] {
    require(out, "out");
    *out = new wga_state{wga::coherent_state(n_modes, site, {amplitude_re, amplitude_im})};
  });
}

void wga_state_destroy(wga_state* state) { delete state; }

int wga_state_n_modes(const wga_state* state) {
  return state == nullptr ? 0 : state->value.n_modes();
}

double wga_state_time(const wga_state* state) {
  return state == nullptr ? 0.0 : state->value.time;
}

wga_status wga_evolve(const wga_config* config, const wga_state* state, double t, double tol,
                      wga_state** out) {
  return guarded([&] {
    require(config, "config");
    require(state, "state");
    require(out, "out");
    const double effective = tol > 0.0 ? tol : wga::kDefaultTolerance;
    *out = new wga_state{wga::evolve(config->value, state->value, t, effective)};
  });
}

wga_status wga_state_moments(const wga_state* state, double* alpha_out, double* normal_out,
                             double* anomalous_out) {
  return guarded([&] {
    require(state, "state");
    const auto& s = state->value;
    if (alpha_out != nullptr) {
      for (Eigen::Index j = 0; j < s.alpha.size(); ++j) {
        alpha_out[2 * j] = s.alpha[j].real();
        alpha_out[2 * j + 1] = s.alpha[j].imag();
      }
    }
    if (normal_out != nullptr) write_complex(s.normal, normal_out);
    if (anomalous_out != nullptr) write_complex(s.anomalous, anomalous_out);
  });
}

wga_status wga_intensities(const wga_state* state, double* out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    const auto profile = wga::intensities(state->value);
    std::copy(profile.begin(), profile.end(), out);
  });
}

wga_status wga_covariance(const wga_state* state, double phase, double* out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    const auto cov = wga::quadrature_covariance(state->value, phase);
    const auto n = cov.matrix.rows();
    for (Eigen::Index r = 0; r < n; ++r) {
      for (Eigen::Index c = 0; c < n; ++c) out[r * n + c] = cov.matrix(r, c);
    }
  });
}

wga_status wga_symplectic_eigenvalues(const wga_state* state, double phase, double* out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    const auto nu =
        wga::symplectic_eigenvalues(wga::quadrature_covariance(state->value, phase));
    std::copy(nu.begin(), nu.end(), out);
  });
}

wga_status wga_duan(const wga_state* state, int j, int k, double phase, double* out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    *out = wga::duan_correlation(state->value, j, k, phase);
  });
}

wga_status wga_vlf(const wga_state* state, int i, int j, int k, double phase, double* out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    *out = wga::vlf_tripartite(state->value, i, j, k, phase);
  });
}

double wga_duan_closed_form(double g, double J, double t) {
  return wga::duan_closed_form(g, J, t);
}

wga_status wga_bessel_j(int order, double x, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = wga::bessel_j(order, x);
  });
}

wga_status wga_scenario_parse(const char* text, wga_scenario** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new wga_scenario{wga::parse_scenario(text)};
  });
}

void wga_scenario_destroy(wga_scenario* scenario) { delete scenario; }

wga_status wga_scenario_emit(const wga_scenario* scenario, char** out) {
  return guarded([&] {
    require(scenario, "scenario");
    require(out, "out");
    *out = duplicate(wga::emit_scenario(scenario->value));
  });
}

const char* wga_scenario_output_path(const wga_scenario* scenario) {
  return scenario == nullptr ? "" : scenario->value.output_path.c_str();
}

wga_status wga_scenario_run(const wga_scenario* scenario, const wga_run_options* options,
                            char** out) {
  return guarded([&] {
    require(scenario, "scenario");
    require(out, "out");
    const auto table = wga::run_scenario(scenario->value, run_options(options));
    *out = duplicate(wga::render(table, pick_format(options, scenario->value.format)));
  });
}

wga_status wga_figure_run(const char* figure_id, const wga_run_options* options, char** out) {
  return guarded([&] {
    require(figure_id, "figure_id");
    require(out, "out");
    const auto table = wga::reproduce_figure(figure_id, run_options(options));
    *out = duplicate(wga::render(table, pick_format(options, wga::OutputFormat::csv)));
  });
}

wga_status wga_sweep_run(const wga_scenario* scenario, const char* const* axes, size_t n_axes,
                         const wga_run_options* options, char** out) {
  return guarded([&] {
    require(scenario, "scenario");
    require(out, "out");
    if (n_axes > 0) require(axes, "axes");
    std::vector<wga::SweepAxis> parsed;
    for (size_t a = 0; a < n_axes; ++a) {
      require(axes[a], "axis");
      parsed.push_back(wga::parse_axis(axes[a]));
    }
    const auto table = wga::sweep(scenario->value, parsed, run_options(options));
    *out = duplicate(wga::render(table, pick_format(options, scenario->value.format)));
  });
}

}  // extern "C"
