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


#pragma once

#include <complex>

#include <Eigen/Dense>

namespace wga {

/// Two-guide Duan correlation in closed form,
///   M(1,2) = 4 g (2g - J) sin^2(Omega t) / Omega^2,  Omega = sqrt(J^2 - 4g^2),
/// continued to sinh^2(Omega' t) / Omega'^2 for J < 2g and to t^2 at J = 2g.
/// Holds for the pump_phase = pi convention at phi = 0 (equivalently
/// pump_phase = 0 at phi = pi/2).
double duan_closed_form(double g, double J, double t);

/// Same two-guide problem, pump_phase = 0 at phi = 0: the sign of J flips,
///   M(1,2) = 4 g (2g + J) sin^2(Omega t) / Omega^2.
double duan_closed_form_zero_phase(double g, double J, double t);

/// Single pumped guide, pump_phase = 0:
/// A = cosh 2gt, B = -i sinh 2gt, n = sinh^2 2gt, m = -i cosh 2gt sinh 2gt.
struct SqueezerSolution {
  std::complex<double> a;
  std::complex<double> b;
  double n = 0.0;
  std::complex<double> m;
};

SqueezerSolution squeezer_closed_form(double g, double t);

/// exp(iKt) for the unpumped two-guide coupler K = [[0, J], [J, 0]].
Eigen::Matrix2cd coupler_closed_form(double J, double t);

}  // namespace wga
