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


#include "wgarray/moments.hpp"

#include <cmath>
#include <string>

#include "wgarray/error.hpp"
#include "wgarray/observables.hpp"

namespace wga {

namespace {

using cd = std::complex<double>;

// Hard failure threshold for the uncertainty principle inside evolve. Tests
// assert the much tighter 1e-9; this only catches genuine breakdown.
constexpr double kPhysicalityFailure = 1e-6;

void check_site(int n_modes, int site) {
  if (site < 1 || site > n_modes) {
    throw ValidationError("site " + std::to_string(site) + " outside 1.." +
                          std::to_string(n_modes));
  }
}

ComplexVector pack(const MomentState& s) {
  const Eigen::Index n = s.alpha.size();
  ComplexVector y(n + 2 * n * n);
  y.head(n) = s.alpha;
  y.segment(n, n * n) = Eigen::Map<const ComplexVector>(s.normal.data(), n * n);
  y.tail(n * n) = Eigen::Map<const ComplexVector>(s.anomalous.data(), n * n);
  return y;
}

MomentState unpack(const ComplexVector& y, Eigen::Index n, double time) {
  MomentState s;
  s.alpha = y.head(n);
  s.normal = Eigen::Map<const ComplexMatrix>(y.data() + n, n, n);
  s.anomalous = Eigen::Map<const ComplexMatrix>(y.data() + n + n * n, n, n);
  s.time = time;
  return s;
}

void check_physical(const MomentState& s) {
  const auto cov = quadrature_covariance(s, 0.0);
  const double scale = std::max(1.0, cov.matrix.cwiseAbs().maxCoeff());
  const double nu = min_symplectic_eigenvalue(cov);
  if (!(nu >= 0.5 - kPhysicalityFailure * scale)) {
    throw NumericalError("moment state violates the uncertainty principle at t = " +
                         std::to_string(s.time) + " (min symplectic eigenvalue " +
                         std::to_string(nu) + ")");
  }
}

}  // namespace

MomentState vacuum_state(int n_modes) {
  if (n_modes < 1) throw ValidationError("n_modes must be >= 1");
  MomentState s;
  s.alpha = ComplexVector::Zero(n_modes);
  s.normal = ComplexMatrix::Zero(n_modes, n_modes);
  s.anomalous = ComplexMatrix::Zero(n_modes, n_modes);
  return s;
}

MomentState coherent_state(int n_modes, int site, std::complex<double> amplitude) {
  auto s = vacuum_state(n_modes);
  check_site(n_modes, site);
  const int j = site - 1;
  s.alpha[j] = amplitude;
  s.normal(j, j) = std::norm(amplitude);
  s.anomalous(j, j) = amplitude * amplitude;
  return s;
}

MomentState evolve(const ArrayConfig& config, const MomentState& state0, double t, double tol) {
  const auto drift = build_drift(config);
  const Eigen::Index n = config.n_modes;
  if (state0.alpha.size() != n || state0.normal.rows() != n || state0.normal.cols() != n ||
      state0.anomalous.rows() != n || state0.anomalous.cols() != n) {
    throw ValidationError("evolve: state has " + std::to_string(state0.alpha.size()) +
                          " modes, config has " + std::to_string(n));
  }
  if (!std::isfinite(t) || t < state0.time) {
    throw ValidationError("evolve: target time precedes the state's time");
  }

  const cd i(0.0, 1.0);
  const cd pump = std::polar(1.0, drift.pump_phase);
  const ComplexMatrix k = drift.coupling.cast<cd>();
  const ComplexMatrix g = drift.gain.cast<cd>();
  const ComplexMatrix pg = pump * g;
  const ComplexMatrix cpg = std::conj(pump) * g;
  const double gamma = config.loss_rate;

  const LinearRhs rhs = [&, n](const ComplexVector& y, ComplexVector& dy) {
    const auto alpha = y.head(n);
    Eigen::Map<const ComplexMatrix> nm(y.data() + n, n, n);
    Eigen::Map<const ComplexMatrix> mm(y.data() + n + n * n, n, n);
    Eigen::Map<ComplexMatrix> dn(dy.data() + n, n, n);
    Eigen::Map<ComplexMatrix> dm(dy.data() + n + n * n, n, n);

    dy.head(n) = i * (k * alpha) - (0.5 * gamma) * alpha - 2.0 * i * (pg * alpha.conjugate());
    dn = -i * (k * nm - nm * k) + 2.0 * i * (cpg * mm - mm.conjugate() * pg) - gamma * nm;
    // The trailing pg term is the vacuum seed of the anomalous moment.
    dm = i * (k * mm + mm * k) - 2.0 * i * (pg * nm + nm.transpose() * pg + pg) - gamma * mm;
  };

  ComplexVector y = integrate_linear(rhs, pack(state0), t - state0.time, tol);
  auto out = unpack(y, n, t);
  check_physical(out);
  return out;
}

MomentState apply(const BogoliubovPropagator& p, const MomentState& s) {
  const Eigen::Index n = p.a_matrix.rows();
  if (s.alpha.size() != n) throw ValidationError("apply: mode count mismatch");
  const auto& a = p.a_matrix;
  const auto& b = p.b_matrix;
  const ComplexMatrix ac = a.conjugate();
  const ComplexMatrix bc = b.conjugate();
  const ComplexMatrix mc = s.anomalous.conjugate();
  // <a_l a_p^dag> = delta_lp + n_pl
  const ComplexMatrix anti = ComplexMatrix::Identity(n, n) + s.normal.transpose();

  MomentState out;
  out.alpha = a * s.alpha + b * s.alpha.conjugate();
  out.normal = ac * s.normal * a.transpose() + ac * mc * b.transpose() +
               bc * s.anomalous * a.transpose() + bc * anti * b.transpose();
  out.anomalous = a * s.anomalous * a.transpose() + a * anti * b.transpose() +
                  b * s.normal * a.transpose() + b * mc * b.transpose();
  out.time = s.time + p.time;
  return out;
}

double max_difference(const MomentState& x, const MomentState& y) {
  if (x.alpha.size() != y.alpha.size()) throw ValidationError("max_difference: size mismatch");
  if (x.alpha.size() == 0) return 0.0;
  return std::max({(x.alpha - y.alpha).cwiseAbs().maxCoeff(),
                   (x.normal - y.normal).cwiseAbs().maxCoeff(),
                   (x.anomalous - y.anomalous).cwiseAbs().maxCoeff()});
}

double structure_defect(const MomentState& s) {
  if (s.alpha.size() == 0) return 0.0;
  return std::max((s.normal - s.normal.adjoint()).cwiseAbs().maxCoeff(),
                  (s.anomalous - s.anomalous.transpose()).cwiseAbs().maxCoeff());
}

ConsistencyReport consistency_check_lossless(const ArrayConfig& config, double t, double tol,
                                             double integrator_tol) {
  if (config.loss_rate != 0.0) {
    throw ValidationError("consistency_check_lossless needs loss_rate = 0");
  }
  const auto p = propagate(config, t);
  const auto vac = vacuum_state(config.n_modes);
  const auto coh = coherent_state(config.n_modes, 1, {1.0, 0.0});

  ConsistencyReport r;
  r.vacuum_discrepancy = max_difference(evolve(config, vac, t, integrator_tol), apply(p, vac));
  r.coherent_discrepancy = max_difference(evolve(config, coh, t, integrator_tol), apply(p, coh));
  r.passed = std::max(r.vacuum_discrepancy, r.coherent_discrepancy) <= tol;
  return r;
}

}  // namespace wga
