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

#include <functional>

#include <Eigen/Dense>

namespace wga {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// exp(M t) by scaling and squaring around a degree-13 Pade approximant.
/// Throws ValidationError for non-square or non-finite input.
ComplexMatrix expm(const ComplexMatrix& m, double t);

/// dy/dt = f(y). The callback writes the derivative into its second argument.
/// The map may be real-linear or affine; nothing else is assumed.
using LinearRhs = std::function<void(const ComplexVector&, ComplexVector&)>;

struct IntegratorStats {
  int accepted_steps = 0;
  int rejected_steps = 0;
};

inline constexpr double kDefaultTolerance = 1e-10;

/// Adaptive Dormand-Prince 5(4) from 0 to t. Each accepted step satisfies
///   max_i |err_i| / max(1, |y_i|) <= tol.
/// Throws NumericalError if the step size underflows or the state stops being finite.
ComplexVector integrate_linear(const LinearRhs& rhs, ComplexVector y0, double t,
                               double tol = kDefaultTolerance, IntegratorStats* stats = nullptr);

/// Convenience: flow of dy/dt = M y, the dual route to expm.
ComplexMatrix integrate_matrix_flow(const ComplexMatrix& m, double t,
                                    double tol = kDefaultTolerance);

/// Bessel function of the first kind J_n(x), 0 <= n <= 60, |x| <= 50.
double bessel_j(int order, double x);

}  // namespace wga
