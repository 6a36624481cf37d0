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

namespace wga {

/// Physical description of an array of N evanescently coupled chi(2) waveguides.
///
/// All rates are dimensionless (units of a reference rate, conventionally J = 1).
/// Couplings are per link: link_couplings[l] couples sites l and l+1 (0-based
/// internally, 1-based in every file and CLI surface). Boundaries are open.
///
/// pump_phase rotates the pump term of the Heisenberg equations:
///   da_j/dt = -2i g_j e^{i pump_phase} a_j^dag + i sum_l K_jl a_l
/// The default 0 is the textbook form with real, positive gain.
struct ArrayConfig {
  int n_modes = 1;
  std::vector<double> pump_gains;
  std::vector<double> link_couplings;
  double loss_rate = 0.0;
  double pump_phase = 0.0;

  bool operator==(const ArrayConfig&) const = default;

  /// Uniform array: every site gets gain g, every link coupling J.
  static ArrayConfig uniform(int n_modes, double g, double J, double loss_rate = 0.0,
                             double pump_phase = 0.0);
};

/// Throws ValidationError if any invariant of ArrayConfig is broken.
void validate(const ArrayConfig& config);

struct DriftMatrices {
  Eigen::MatrixXd coupling;  // K: symmetric, tridiagonal, zero diagonal
  Eigen::MatrixXd gain;      // G = diag(g)
  double pump_phase = 0.0;
};

DriftMatrices build_drift(const ArrayConfig& config);

/// Heisenberg flow d/dt (a; a^dag) = S (a; a^dag) with
///   S = [[ iK, -2i e^{i theta} G ], [ 2i e^{-i theta} G, -iK ]].
/// The lower block row is the entrywise conjugate of the upper one, which is
/// what keeps the a <-> a^dag adjoint pairing intact under the flow.
struct BogoliubovGenerator {
  Eigen::MatrixXcd matrix;

  int n_modes() const { return static_cast<int>(matrix.rows() / 2); }
};

BogoliubovGenerator build_generator(const DriftMatrices& drift);

/// Max deviation of S from the [[X, Y], [conj(Y), conj(X)]] pattern. Zero for
/// anything produced by build_generator.
double generator_structure_defect(const BogoliubovGenerator& generator);

}  // namespace wga
