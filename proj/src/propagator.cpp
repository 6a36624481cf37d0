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


#include "wgarray/propagator.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "wgarray/error.hpp"

namespace wga {

namespace {

BogoliubovPropagator from_full(const ComplexMatrix& full, double t) {
  const auto n = full.rows() / 2;
  BogoliubovPropagator p;
  p.a_matrix = full.topLeftCorner(n, n);
  p.b_matrix = full.topRightCorner(n, n);
  p.time = t;
  return p;
}

void check_residual(const BogoliubovPropagator& p) {
  const auto r = symplectic_residual(p);
  if (!(r.worst() <= kSymplecticFailure)) {
    throw NumericalError("propagator lost symplectic structure at t = " + std::to_string(p.time) +
                         " (residual " + std::to_string(r.worst()) + ")");
  }
}

}  // namespace

ComplexMatrix BogoliubovPropagator::full() const {
  const auto n = a_matrix.rows();
  ComplexMatrix f(2 * n, 2 * n);
  f.topLeftCorner(n, n) = a_matrix;
  f.topRightCorner(n, n) = b_matrix;
  f.bottomLeftCorner(n, n) = b_matrix.conjugate();
  f.bottomRightCorner(n, n) = a_matrix.conjugate();
  return f;
}

BogoliubovPropagator BogoliubovPropagator::identity(int n_modes) {
  BogoliubovPropagator p;
  p.a_matrix = ComplexMatrix::Identity(n_modes, n_modes);
  p.b_matrix = ComplexMatrix::Zero(n_modes, n_modes);
  return p;
}

SymplecticResidual symplectic_residual(const BogoliubovPropagator& p) {
  const auto& a = p.a_matrix;
  const auto& b = p.b_matrix;
  const auto n = a.rows();
  SymplecticResidual r;
  if (n == 0) return r;
  const ComplexMatrix c = a * a.adjoint() - b * b.adjoint() - ComplexMatrix::Identity(n, n);
  const ComplexMatrix s = a * b.transpose() - b * a.transpose();
  r.commutator = c.cwiseAbs().maxCoeff();
  r.symmetry = s.cwiseAbs().maxCoeff();
  return r;
}

BogoliubovPropagator propagate(const ArrayConfig& config, double t,
                               std::vector<std::string>* warnings) {
  if (!std::isfinite(t) || t < 0.0) throw ValidationError("propagate: t must be >= 0");
  const auto generator = build_generator(build_drift(config));
  if (config.loss_rate != 0.0 && warnings != nullptr) {
    warnings->push_back("loss_rate ignored by the lossless propagator");
  }
  auto p = from_full(expm(generator.matrix, t), t);
  check_residual(p);
  return p;
}

BogoliubovPropagator propagate_integrated(const ArrayConfig& config, double t, double tol) {
  const auto generator = build_generator(build_drift(config));
  auto p = from_full(integrate_matrix_flow(generator.matrix, t, tol), t);
  check_residual(p);
  return p;
}

BogoliubovPropagator compose(const BogoliubovPropagator& later,
                             const BogoliubovPropagator& earlier) {
  if (later.n_modes() != earlier.n_modes()) {
    throw ValidationError("compose: propagators have different mode counts");
  }
  return from_full(later.full() * earlier.full(), later.time + earlier.time);
}

std::complex<double> walk_amplitude_oracle(int j, int k, double coupling, double t) {
  const int d = std::abs(j - k);
  static constexpr std::complex<double> kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kPhases[d % 4] * bessel_j(d, 2.0 * coupling * t);
}

}  // namespace wga
