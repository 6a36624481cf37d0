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


#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "doctest.h"
#include "wgarray/wgarray.h"

namespace {

const char* kSpec = R"([array]
n_modes = 2
pump_gains = 0.4
link_couplings = 1
pump_phase = pi

[time]
times = 0, 1

[observables]
duan_pairs = 1-2
)";

}  // namespace

TEST_CASE("version string") {
  CHECK(std::string(wga_version()) == "1.0.0");
}

TEST_CASE("config validation reports through status codes") {
  wga_config* config = nullptr;
  const double gains[2] = {0.1, 0.1};
  const double links[1] = {1.0};
  CHECK(wga_config_create(0, gains, links, 0.0, 0.0, &config) == WGA_ERR_VALIDATION);
  CHECK(config == nullptr);
  CHECK(std::string(wga_last_error()).find("n_modes") != std::string::npos);
  CHECK(wga_config_create(2, gains, links, -1.0, 0.0, &config) == WGA_ERR_VALIDATION);
  CHECK(wga_config_create(2, gains, nullptr, 0.0, 0.0, &config) == WGA_ERR_VALIDATION);
  CHECK(wga_config_create(2, gains, links, 0.0, 0.0, nullptr) == WGA_ERR_VALIDATION);
  REQUIRE(wga_config_create(2, gains, links, 0.0, 0.0, &config) == WGA_OK);
  CHECK(std::string(wga_last_error()).empty());
  CHECK(wga_config_n_modes(config) == 2);
  wga_config_destroy(config);
  wga_config_destroy(nullptr);
}

TEST_CASE("single-mode config needs no links") {
  wga_config* config = nullptr;
  const double gain = 0.5;
  REQUIRE(wga_config_create(1, &gain, nullptr, 0.0, 0.0, &config) == WGA_OK);
  wga_propagator* p = nullptr;
  REQUIRE(wga_propagate(config, 1.0, &p) == WGA_OK);
  double a[2], b[2];
  REQUIRE(wga_propagator_matrices(p, a, b) == WGA_OK);
  CHECK(std::abs(a[0] - std::cosh(1.0)) < 1e-13);
  CHECK(std::abs(a[1]) < 1e-13);
  CHECK(std::abs(b[0]) < 1e-13);
  CHECK(std::abs(b[1] + std::sinh(1.0)) < 1e-13);
  double r1 = 1, r2 = 1;
  REQUIRE(wga_propagator_residuals(p, &r1, &r2) == WGA_OK);
  CHECK(r1 <= 1e-9);
  CHECK(r2 <= 1e-9);
  wga_propagator_destroy(p);
  CHECK(wga_propagate(config, -1.0, &p) == WGA_ERR_VALIDATION);
  wga_config_destroy(config);
}

TEST_CASE("states, evolution and observables") {
  wga_config* config = nullptr;
  const double gains[2] = {0.4, 0.4};
  const double links[1] = {1.0};
  REQUIRE(wga_config_create(2, gains, links, 0.0, M_PI, &config) == WGA_OK);

  wga_state* vac = nullptr;
  REQUIRE(wga_state_vacuum(2, &vac) == WGA_OK);
  CHECK(wga_state_n_modes(vac) == 2);
  wga_state* later = nullptr;
  REQUIRE(wga_evolve(config, vac, 1.5, 1e-12, &later) == WGA_OK);
  CHECK(wga_state_time(later) == 1.5);

  double m = 0.0;
  REQUIRE(wga_duan(later, 1, 2, 0.0, &m) == WGA_OK);
  CHECK(std::abs(m - wga_duan_closed_form(0.4, 1.0, 1.5)) < 1e-9);
  CHECK(wga_duan(later, 1, 1, 0.0, &m) == WGA_ERR_VALIDATION);

  double profile[2];
  REQUIRE(wga_intensities(later, profile) == WGA_OK);
  CHECK(profile[0] > 0.0);
  CHECK(std::abs(profile[0] - profile[1]) < 1e-12);

  std::vector<double> cov(16);
  REQUIRE(wga_covariance(vac, 0.3, cov.data()) == WGA_OK);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) CHECK(cov[r * 4 + c] == (r == c ? 0.5 : 0.0));

  double nu[2];
  REQUIRE(wga_symplectic_eigenvalues(later, 0.0, nu) == WGA_OK);
  CHECK(nu[0] >= 0.5 - 1e-9);
  CHECK(nu[0] <= nu[1]);

  std::vector<double> normal(8), anomalous(8), alpha(4);
  REQUIRE(wga_state_moments(later, alpha.data(), normal.data(), anomalous.data()) == WGA_OK);
  CHECK(normal[0] == profile[0]);

  wga_state* coh = nullptr;
  CHECK(wga_state_coherent(2, 3, 1.0, 0.0, &coh) == WGA_ERR_VALIDATION);
  REQUIRE(wga_state_coherent(2, 1, 1.0, 2.0, &coh) == WGA_OK);
  REQUIRE(wga_state_moments(coh, alpha.data(), nullptr, nullptr) == WGA_OK);
  CHECK(alpha[0] == 1.0);
  CHECK(alpha[1] == 2.0);

  double v = 0.0;
  CHECK(wga_vlf(vac, 1, 2, 3, 0.0, &v) == WGA_ERR_VALIDATION);

  wga_state_destroy(coh);
  wga_state_destroy(later);
  wga_state_destroy(vac);
  wga_config_destroy(config);
}

TEST_CASE("Bessel values") {
  double j = 0.0;
  REQUIRE(wga_bessel_j(0, 2.0, &j) == WGA_OK);
  CHECK(std::abs(j - 0.22389077914123567) < 1e-13);
  CHECK(wga_bessel_j(70, 2.0, &j) == WGA_ERR_VALIDATION);
}

TEST_CASE("scenarios") {
  wga_scenario* s = nullptr;
  CHECK(wga_scenario_parse("[array]\nn_modes = x\n", &s) == WGA_ERR_VALIDATION);
  CHECK(std::string(wga_last_error()).find("n_modes") != std::string::npos);
  REQUIRE(wga_scenario_parse(kSpec, &s) == WGA_OK);
  CHECK(std::string(wga_scenario_output_path(s)).empty());

  char* emitted = nullptr;
  REQUIRE(wga_scenario_emit(s, &emitted) == WGA_OK);
  wga_scenario* again = nullptr;
  REQUIRE(wga_scenario_parse(emitted, &again) == WGA_OK);
  wga_string_free(emitted);

  char* csv = nullptr;
  REQUIRE(wga_scenario_run(s, nullptr, &csv) == WGA_OK);
  const std::string text = csv;
  wga_string_free(csv);
  CHECK(text.rfind("scenario_id,time,observable,i,j,k,phi,value\n", 0) == 0);
  CHECK(text.find("scenario,1,duan,1,2,,0,") != std::string::npos);

  char* csv_again = nullptr;
  REQUIRE(wga_scenario_run(again, nullptr, &csv_again) == WGA_OK);
  CHECK(text == csv_again);
  wga_string_free(csv_again);

  wga_run_options json{WGA_FORMAT_JSON, 0.0};
  char* doc = nullptr;
  REQUIRE(wga_scenario_run(s, &json, &doc) == WGA_OK);
  CHECK(doc[0] == '[');
  wga_string_free(doc);

  const char* axes[] = {"t=0:1:3", "phi=0:pi/2:2"};
  char* swept = nullptr;
  REQUIRE(wga_sweep_run(s, axes, 2, nullptr, &swept) == WGA_OK);
  CHECK(std::string(swept).rfind("t,phi,scenario_id", 0) == 0);
  wga_string_free(swept);
  const char* bad_axes[] = {"omega=0:1:3"};
  CHECK(wga_sweep_run(s, bad_axes, 1, nullptr, &swept) == WGA_ERR_VALIDATION);

  wga_scenario_destroy(again);
  wga_scenario_destroy(s);
}

TEST_CASE("figures") {
  char* out = nullptr;
  CHECK(wga_figure_run("fig7", nullptr, &out) == WGA_ERR_VALIDATION);
  REQUIRE(wga_figure_run("fig4", nullptr, &out) == WGA_OK);
  CHECK(std::string(out).rfind("# figure fig4", 0) == 0);
  wga_string_free(out);
}

TEST_CASE("numerical failures map to their own status") {
  wga_config* config = nullptr;
  const double gain = 400.0;
  REQUIRE(wga_config_create(1, &gain, nullptr, 0.1, 0.0, &config) == WGA_OK);
  wga_state* vac = nullptr;
  REQUIRE(wga_state_vacuum(1, &vac) == WGA_OK);
  wga_state* out = nullptr;
  CHECK(wga_evolve(config, vac, 10.0, 0.0, &out) == WGA_ERR_NUMERICAL);
  CHECK(out == nullptr);
  wga_state_destroy(vac);
  wga_config_destroy(config);
}
