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

#include <vector>

#include <Eigen/Dense>

#include "wgarray/moments.hpp"

namespace wga {

/// Symmetrized covariance of (q_1..q_N, p_1..p_N) with
///   q_j = (a_j e^{-i phi} + a_j^dag e^{i phi}) / sqrt(2)
///   p_j = (a_j e^{-i phi} - a_j^dag e^{i phi}) / (sqrt(2) i)
/// centered on the first moments. Vacuum is identity / 2.
struct QuadratureCovariance {
  double phase = 0.0;
  Eigen::MatrixXd matrix;

  int n_modes() const { return static_cast<int>(matrix.rows() / 2); }
};

/// I_j = <a_j^dag a_j>.
std::vector<double> intensities(const MomentState& state);

/// Participation ratio (sum I)^2 / sum I^2; 0 for an empty profile.
double participation_ratio(const std::vector<double>& profile);

QuadratureCovariance quadrature_covariance(const MomentState& state, double phase);

/// The N symplectic eigenvalues, ascending. Throws ValidationError if the
/// matrix is not symmetric.
std::vector<double> symplectic_eigenvalues(const QuadratureCovariance& cov);
double min_symplectic_eigenvalue(const QuadratureCovariance& cov);

/// Duan correlation from raw (uncentered) moments:
///   M(j,k) = n_jj + n_kk + 2 Re(e^{-2i phi} m_jk).
/// M < 0 witnesses entanglement. Indices are 1-based and must differ.
double duan_correlation(const MomentState& state, int j, int k, double phase);

/// Same quantity with first moments removed (n - conj(alpha) alpha^T, m - alpha alpha^T).
double duan_correlation_centered(const MomentState& state, int j, int k, double phase);

/// M(j,k) recomputed from a centered covariance plus the displacement; an
/// independent route used to cross-check duan_correlation.
double duan_from_covariance(const QuadratureCovariance& cov, const MomentState& state, int j,
                            int k);

/// All pairs; diagonal set to zero.
Eigen::MatrixXd duan_matrix(const MomentState& state, double phase);

/// van Loock-Furusawa sum
///   V = Var(X_i - (X_j + X_k)/sqrt 2) + Var(Y_i + (Y_j + Y_k)/sqrt 2)
/// with X = a e^{-i phi} + h.c. (vacuum variance 1). V < 4 witnesses full
/// tripartite inseparability.
double vlf_tripartite(const MomentState& state, int i, int j, int k, double phase);

inline constexpr int kPhaseGridPoints = 180;

struct PhaseMinimum {
  double phase = 0.0;
  double value = 0.0;
};

/// Minimizes M(j,k) over phi on the uniform grid of 180 points in [0, pi).
PhaseMinimum minimize_duan_over_phase(const MomentState& state, int j, int k);

}  // namespace wga
