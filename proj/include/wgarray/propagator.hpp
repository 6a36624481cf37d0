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
#include <string>
#include <vector>

#include "wgarray/kernels.hpp"
#include "wgarray/model.hpp"

namespace wga {

/// Input-output map of the lossless array at time t:
///   a_j(t) = sum_k A_jk a_k(0) + sum_k B_jk a_k^dag(0).
struct BogoliubovPropagator {
  ComplexMatrix a_matrix;
  ComplexMatrix b_matrix;
  double time = 0.0;

  int n_modes() const { return static_cast<int>(a_matrix.rows()); }

  /// The 2N x 2N form [[A, B], [conj(B), conj(A)]] acting on (a; a^dag).
  ComplexMatrix full() const;

  static BogoliubovPropagator identity(int n_modes);
};

/// Residuals of the canonical-commutator constraints, not thresholded:
/// first = max|AA^dag - BB^dag - I|, second = max|AB^T - BA^T|.
struct SymplecticResidual {
  double commutator = 0.0;
  double symmetry = 0.0;

  double worst() const { return std::max(commutator, symmetry); }
};

SymplecticResidual symplectic_residual(const BogoliubovPropagator& p);

inline constexpr double kSymplecticTarget = 1e-9;
inline constexpr double kSymplecticFailure = 1e-6;

/// Top block row of exp(S t). loss_rate is ignored here; callers that care about
/// a nonzero loss should use the moment evolution instead. `warnings` (optional)
/// receives a note when a nonzero loss was ignored.
/// Throws NumericalError if the residual exceeds kSymplecticFailure.
BogoliubovPropagator propagate(const ArrayConfig& config, double t,
                               std::vector<std::string>* warnings = nullptr);

/// Same map assembled from the integrator instead of expm.
BogoliubovPropagator propagate_integrated(const ArrayConfig& config, double t,
                                          double tol = kDefaultTolerance);

/// Applies p2 after p1 (the 2N x 2N product p2.full() * p1.full()).
BogoliubovPropagator compose(const BogoliubovPropagator& later,
                             const BogoliubovPropagator& earlier);

/// Infinite uniform lattice, no pump: A_jk = i^|j-k| J_|j-k|(2 J t).
std::complex<double> walk_amplitude_oracle(int j, int k, double coupling, double t);

}  // namespace wga
