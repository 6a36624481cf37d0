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

#include "wgarray/kernels.hpp"
#include "wgarray/model.hpp"
#include "wgarray/propagator.hpp"

namespace wga {

/// Gaussian-state moments of the signal modes:
///   alpha_j = <a_j>, normal_jk = <a_j^dag a_k>, anomalous_jk = <a_j a_k>.
/// For a quadratic Hamiltonian with linear damping these close on themselves,
/// so they describe the state exactly.
struct MomentState {
  ComplexVector alpha;
  ComplexMatrix normal;
  ComplexMatrix anomalous;
  double time = 0.0;

  int n_modes() const { return static_cast<int>(alpha.size()); }
};

MomentState vacuum_state(int n_modes);

/// Coherent |amplitude> in `site` (1-based), vacuum elsewhere.
MomentState coherent_state(int n_modes, int site, std::complex<double> amplitude);

/// Moment equations of the Heisenberg drift plus zero-temperature damping at
/// rate gamma on every mode (p = e^{i pump_phase}):
///   d alpha/dt = (iK - gamma/2) alpha - 2i p G conj(alpha)
///   d n/dt     = -i[K, n] + 2i (conj(p) G m - p conj(m) G) - gamma n
///   d m/dt     = i(K m + m K) - 2i p (G n + n^T G + G) - gamma m
/// Advances state0 from state0.time to t. Throws NumericalError if the
/// integrator fails or the result violates the uncertainty principle.
MomentState evolve(const ArrayConfig& config, const MomentState& state0, double t,
                   double tol = kDefaultTolerance);

/// Exact lossless map of the moments through a Bogoliubov propagator.
MomentState apply(const BogoliubovPropagator& p, const MomentState& state0);

/// Max entrywise discrepancy across alpha, n and m.
double max_difference(const MomentState& x, const MomentState& y);

/// Hermiticity of n plus symmetry of m, as a max entrywise defect.
double structure_defect(const MomentState& s);

struct ConsistencyReport {
  double vacuum_discrepancy = 0.0;
  double coherent_discrepancy = 0.0;
  bool passed = false;
};

/// Evolves vacuum and a coherent input (alpha=1 at the first site) both through
/// the moment equations and through the Bogoliubov propagator and compares.
/// Requires config.loss_rate == 0.
ConsistencyReport consistency_check_lossless(const ArrayConfig& config, double t, double tol,
                                             double integrator_tol = kDefaultTolerance);

}  // namespace wga
