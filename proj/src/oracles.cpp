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


#include "wgarray/oracles.hpp"

#include <cmath>

namespace wga {

namespace {

// sin^2(Omega t) / Omega^2 continued analytically in Omega^2 = J^2 - 4g^2.
double oscillation_factor(double g, double J, double t) {
  const double omega_sq = J * J - 4.0 * g * g;
  if (omega_sq == 0.0) return t * t;
  const double omega = std::sqrt(std::abs(omega_sq));
  const double x = omega * t;
  if (x == 0.0) return t * t;
  const double ratio = omega_sq > 0.0 ? std::sin(x) / x : std::sinh(x) / x;
  return t * t * ratio * ratio;
}

}  // namespace

double duan_closed_form(double g, double J, double t) {
  return 4.0 * g * (2.0 * g - J) * oscillation_factor(g, J, t);
}

double duan_closed_form_zero_phase(double g, double J, double t) {
  return 4.0 * g * (2.0 * g + J) * oscillation_factor(g, J, t);
}

SqueezerSolution squeezer_closed_form(double g, double t) {
  const double r = 2.0 * g * t;
  const double c = std::cosh(r);
  const double s = std::sinh(r);
  return {c, {0.0, -s}, s * s, {0.0, -c * s}};
}

Eigen::Matrix2cd coupler_closed_form(double J, double t) {
  const std::complex<double> c(std::cos(J * t), 0.0);
  const std::complex<double> s(0.0, std::sin(J * t));
  Eigen::Matrix2cd u;
  u << c, s, s, c;
  return u;
}

}  // namespace wga
