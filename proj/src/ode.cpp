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


#include <algorithm>
#include <cmath>
#include <string>

#include "wgarray/error.hpp"
#include "wgarray/kernels.hpp"

namespace wga {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
// b - b* (fifth minus embedded fourth order weights)
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

double scaled_error(const ComplexVector& err, const ComplexVector& y0, const ComplexVector& y1) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < err.size(); ++i) {
    const double scale = std::max({1.0, std::abs(y0[i]), std::abs(y1[i])});
    worst = std::max(worst, std::abs(err[i]) / scale);
  }
  return worst;
}

}  // namespace

ComplexVector integrate_linear(const LinearRhs& rhs, ComplexVector y, double t, double tol,
                               IntegratorStats* stats) {
  if (!(tol > 0.0)) throw ValidationError("integrate_linear: tol must be > 0");
  if (!std::isfinite(t) || t < 0.0) throw ValidationError("integrate_linear: t must be >= 0");
  if (t == 0.0 || y.size() == 0) return y;

  const auto n = y.size();
  ComplexVector k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), y_new(n), err(n), tmp(n);
  rhs(y, k1);

  // Initial step from the derivative scale, as in Hairer-Norsett-Wanner II.4.
  const double d0 = y.cwiseAbs().maxCoeff();
  const double d1 = k1.cwiseAbs().maxCoeff();
  double h = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * std::max(d0, 1.0) / d1;
  h = std::min({h, t, 0.1});
  h = std::max(h, 1e-8 * t);

  const double h_min = 1e-14 * std::max(1.0, t);
  double time = 0.0;
  int accepted = 0;
  int rejected = 0;
  while (time < t) {
    const bool last = time + h >= t;
    if (last) h = t - time;

    tmp = y + h * (a21 * k1);
    rhs(tmp, k2);
    tmp = y + h * (a31 * k1 + a32 * k2);
    rhs(tmp, k3);
    tmp = y + h * (a41 * k1 + a42 * k2 + a43 * k3);
    rhs(tmp, k4);
    tmp = y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
    rhs(tmp, k5);
    tmp = y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
    rhs(tmp, k6);
    y_new = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    rhs(y_new, k7);
    err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    if (!y_new.allFinite() || !k7.allFinite()) {
      throw NumericalError("integrate_linear: state diverged near t = " + std::to_string(time));
    }

    const double error = scaled_error(err, y, y_new) / tol;
    if (error <= 1.0) {
      time = last ? t : time + h;
      y.swap(y_new);
      k1.swap(k7);  // first-same-as-last
      ++accepted;
    } else {
      ++rejected;
    }

    const double factor = error == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(error, -0.2), 0.2, 5.0);
    h *= error <= 1.0 ? factor : std::min(factor, 1.0);
    if (time < t && h < h_min) {
      throw NumericalError("integrate_linear: step size underflow at t = " +
                           std::to_string(time));
    }
  }
  if (stats != nullptr) {
    stats->accepted_steps = accepted;
    stats->rejected_steps = rejected;
  }
  return y;
}

ComplexMatrix integrate_matrix_flow(const ComplexMatrix& m, double t, double tol) {
  if (m.rows() != m.cols()) throw ValidationError("integrate_matrix_flow: matrix must be square");
  const auto n = m.rows();
  // Column-stacked identity; each column evolves independently under y' = M y.
  ComplexVector y0 = Eigen::Map<const ComplexVector>(ComplexMatrix::Identity(n, n).eval().data(),
                                                     n * n);
  const LinearRhs rhs = [&m, n](const ComplexVector& y, ComplexVector& dy) {
    Eigen::Map<const ComplexMatrix> ym(y.data(), n, n);
    Eigen::Map<ComplexMatrix> dym(dy.data(), n, n);
    dym.noalias() = m * ym;
  };
  ComplexVector y = integrate_linear(rhs, std::move(y0), t, tol);
  return Eigen::Map<ComplexMatrix>(y.data(), n, n);
}

}  // namespace wga
