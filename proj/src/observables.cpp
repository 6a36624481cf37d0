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


#include "wgarray/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wgarray/error.hpp"

namespace wga {

namespace {

using cd = std::complex<double>;

void check_index(const MomentState& s, int j, const char* what) {
  if (j < 1 || j > s.n_modes()) {
    throw ValidationError(std::string(what) + " index " + std::to_string(j) + " outside 1.." +
                          std::to_string(s.n_modes()));
  }
}

void check_pair(const MomentState& s, int j, int k) {
  check_index(s, j, "mode");
  check_index(s, k, "mode");
  if (j == k) throw ValidationError("duan correlation needs two distinct modes");
}

double duan_from(const ComplexMatrix& normal, const ComplexMatrix& anomalous, int j, int k,
                 double phase) {
  const cd rot = std::polar(1.0, -2.0 * phase);
  return normal(j - 1, j - 1).real() + normal(k - 1, k - 1).real() +
         2.0 * (rot * anomalous(j - 1, k - 1)).real();
}

Eigen::MatrixXd symplectic_form(int n) {
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  omega.topRightCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
  omega.bottomLeftCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);
  return omega;
}

}  // namespace

std::vector<double> intensities(const MomentState& state) {
  std::vector<double> out(state.n_modes());
  for (int j = 0; j < state.n_modes(); ++j) out[j] = state.normal(j, j).real();
  return out;
}

double participation_ratio(const std::vector<double>& profile) {
  double sum = 0.0;
  double sum_sq = 0.0;
  for (double v : profile) {
    sum += v;
    sum_sq += v * v;
  }
  return sum_sq == 0.0 ? 0.0 : sum * sum / sum_sq;
}

QuadratureCovariance quadrature_covariance(const MomentState& state, double phase) {
  const int n = state.n_modes();
  const ComplexMatrix centered_n =
      state.normal - state.alpha.conjugate() * state.alpha.transpose();
  const ComplexMatrix rotated_m =
      std::polar(1.0, -2.0 * phase) * (state.anomalous - state.alpha * state.alpha.transpose());
  const Eigen::MatrixXd half_identity = 0.5 * Eigen::MatrixXd::Identity(n, n);

  QuadratureCovariance cov;
  cov.phase = phase;
  cov.matrix.resize(2 * n, 2 * n);
  cov.matrix.topLeftCorner(n, n) = half_identity + centered_n.real() + rotated_m.real();
  cov.matrix.bottomRightCorner(n, n) = half_identity + centered_n.real() - rotated_m.real();
  const Eigen::MatrixXd qp = rotated_m.imag() + centered_n.imag();
  cov.matrix.topRightCorner(n, n) = qp;
  cov.matrix.bottomLeftCorner(n, n) = qp.transpose();
  return cov;
}

std::vector<double> symplectic_eigenvalues(const QuadratureCovariance& cov) {
  const auto& s = cov.matrix;
  if (s.rows() != s.cols() || s.rows() % 2 != 0) {
    throw ValidationError("covariance must be square with even dimension");
  }
  const int n = static_cast<int>(s.rows() / 2);
  if (n == 0) return {};
  const double scale = std::max(1.0, s.cwiseAbs().maxCoeff());
  if ((s - s.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw ValidationError("covariance matrix is not symmetric");
  }
  const Eigen::MatrixXd omega = symplectic_form(n);

  std::vector<double> magnitudes;
  magnitudes.reserve(2 * n);
  Eigen::LLT<Eigen::MatrixXd> llt(s);
  if (llt.info() == Eigen::Success) {
    // i Omega sigma is similar to the Hermitian i L^T Omega L (sigma = L L^T).
    const Eigen::MatrixXd l = llt.matrixL();
    const Eigen::MatrixXcd h = cd(0.0, 1.0) * (l.transpose() * omega * l).cast<cd>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    for (double v : es.eigenvalues()) magnitudes.push_back(std::abs(v));
  } else {
    // Not positive definite: certainly unphysical, but still report the spectrum.
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(cd(0.0, 1.0) * (omega * s).cast<cd>(), false);
    for (const cd& v : es.eigenvalues()) magnitudes.push_back(std::abs(v));
  }
  std::sort(magnitudes.begin(), magnitudes.end());
  std::vector<double> out(n);
  for (int q = 0; q < n; ++q) out[q] = 0.5 * (magnitudes[2 * q] + magnitudes[2 * q + 1]);
  return out;
}

double min_symplectic_eigenvalue(const QuadratureCovariance& cov) {
  const auto values = symplectic_eigenvalues(cov);
  return values.empty() ? 0.5 : values.front();
}

double duan_correlation(const MomentState& state, int j, int k, double phase) {
  check_pair(state, j, k);
  return duan_from(state.normal, state.anomalous, j, k, phase);
}

double duan_correlation_centered(const MomentState& state, int j, int k, double phase) {
  check_pair(state, j, k);
  const ComplexMatrix cn = state.normal - state.alpha.conjugate() * state.alpha.transpose();
  const ComplexMatrix cm = state.anomalous - state.alpha * state.alpha.transpose();
  return duan_from(cn, cm, j, k, phase);
}

double duan_from_covariance(const QuadratureCovariance& cov, const MomentState& state, int j,
                            int k) {
  check_pair(state, j, k);
  const int n = cov.n_modes();
  const auto& s = cov.matrix;
  const int qj = j - 1, qk = k - 1, pj = n + j - 1, pk = n + k - 1;
  // Duan's form: [Var(q_j + q_k) + Var(p_j - p_k)] / 2 - 1 for the centered part.
  const double var_sum = s(qj, qj) + s(qk, qk) + 2.0 * s(qj, qk);
  const double var_diff = s(pj, pj) + s(pk, pk) - 2.0 * s(pj, pk);
  const double centered = 0.5 * (var_sum + var_diff) - 1.0;
  const cd aj = state.alpha[j - 1];
  const cd ak = state.alpha[k - 1];
  return centered + std::norm(aj) + std::norm(ak) +
         2.0 * (std::polar(1.0, -2.0 * cov.phase) * aj * ak).real();
}

Eigen::MatrixXd duan_matrix(const MomentState& state, double phase) {
  const int n = state.n_modes();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (int j = 1; j <= n; ++j) {
    for (int k = j + 1; k <= n; ++k) {
      out(j - 1, k - 1) = duan_correlation(state, j, k, phase);
      out(k - 1, j - 1) = out(j - 1, k - 1);
    }
  }
  return out;
}

double vlf_tripartite(const MomentState& state, int i, int j, int k, double phase) {
  check_index(state, i, "mode");
  check_index(state, j, "mode");
  check_index(state, k, "mode");
  if (i == j || j == k || i == k) {
    throw ValidationError("vlf_tripartite needs three distinct modes");
  }
  const int n = state.n_modes();
  const auto cov = quadrature_covariance(state, phase);
  const auto& s = cov.matrix;
  // Expanded by hand so that vacuum lands on exactly 4.
  auto variance = [&](int a, int b, int c, double sign) {
    return s(a, a) + 0.5 * (s(b, b) + s(c, c) + 2.0 * s(b, c)) +
           sign * std::numbers::sqrt2 * (s(a, b) + s(a, c));
  };
  const int x = 0;
  const int y = n;
  // X = sqrt(2) q, so each variance picks up a factor 2.
  return 2.0 * (variance(x + i - 1, x + j - 1, x + k - 1, -1.0) +
                variance(y + i - 1, y + j - 1, y + k - 1, 1.0));
}

PhaseMinimum minimize_duan_over_phase(const MomentState& state, int j, int k) {
  PhaseMinimum best{0.0, duan_correlation(state, j, k, 0.0)};
  for (int q = 1; q < kPhaseGridPoints; ++q) {
    const double phase = std::numbers::pi * q / kPhaseGridPoints;
    const double value = duan_correlation(state, j, k, phase);
    if (value < best.value) best = {phase, value};
  }
  return best;
}

}  // namespace wga
