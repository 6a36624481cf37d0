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


#include "wgarray/model.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "wgarray/error.hpp"

namespace wga {

namespace {

void require_finite(const std::vector<double>& values, const char* field) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw ValidationError(std::string(field) + "[" + std::to_string(i + 1) + "] is not finite");
    }
  }
}

}  // namespace

ArrayConfig ArrayConfig::uniform(int n_modes, double g, double J, double loss_rate,
                                 double pump_phase) {
  ArrayConfig c;
  c.n_modes = n_modes;
  c.pump_gains.assign(n_modes > 0 ? n_modes : 0, g);
  c.link_couplings.assign(n_modes > 1 ? n_modes - 1 : 0, J);
  c.loss_rate = loss_rate;
  c.pump_phase = pump_phase;
  return c;
}

void validate(const ArrayConfig& config) {
  if (config.n_modes < 1) {
    throw ValidationError("n_modes must be >= 1, got " + std::to_string(config.n_modes));
  }
  const auto n = static_cast<std::size_t>(config.n_modes);
  if (config.pump_gains.size() != n) {
    throw ValidationError("pump_gains has " + std::to_string(config.pump_gains.size()) +
                          " entries, expected n_modes = " + std::to_string(n));
  }
  if (config.link_couplings.size() != n - 1) {
    throw ValidationError("link_couplings has " + std::to_string(config.link_couplings.size()) +
                          " entries, expected n_modes - 1 = " + std::to_string(n - 1));
  }
  require_finite(config.pump_gains, "pump_gains");
  require_finite(config.link_couplings, "link_couplings");
  if (!std::isfinite(config.loss_rate) || config.loss_rate < 0.0) {
    throw ValidationError("loss_rate must be finite and >= 0");
  }
  if (!std::isfinite(config.pump_phase)) {
    throw ValidationError("pump_phase is not finite");
  }
}

DriftMatrices build_drift(const ArrayConfig& config) {
  validate(config);
  const int n = config.n_modes;
  DriftMatrices drift;
  drift.coupling = Eigen::MatrixXd::Zero(n, n);
  drift.gain = Eigen::MatrixXd::Zero(n, n);
  for (int l = 0; l + 1 < n; ++l) {
    drift.coupling(l, l + 1) = config.link_couplings[l];
    drift.coupling(l + 1, l) = config.link_couplings[l];
  }
  for (int j = 0; j < n; ++j) drift.gain(j, j) = config.pump_gains[j];
  drift.pump_phase = config.pump_phase;
  return drift;
}

BogoliubovGenerator build_generator(const DriftMatrices& drift) {
  const Eigen::Index n = drift.coupling.rows();
  if (drift.coupling.cols() != n || drift.gain.rows() != n || drift.gain.cols() != n) {
    throw ValidationError("drift matrices must be square and of equal size");
  }
  using cd = std::complex<double>;
  const cd i(0.0, 1.0);
  const cd pump = std::polar(1.0, drift.pump_phase);

  BogoliubovGenerator s;
  s.matrix.resize(2 * n, 2 * n);
  const Eigen::MatrixXcd k = drift.coupling.cast<cd>();
  const Eigen::MatrixXcd g = drift.gain.cast<cd>();
  s.matrix.topLeftCorner(n, n) = i * k;
  s.matrix.topRightCorner(n, n) = (-2.0 * i * pump) * g;
  s.matrix.bottomLeftCorner(n, n) = (2.0 * i * std::conj(pump)) * g;
  s.matrix.bottomRightCorner(n, n) = -i * k;
  return s;
}

double generator_structure_defect(const BogoliubovGenerator& generator) {
  const Eigen::Index n = generator.matrix.rows() / 2;
  const auto& m = generator.matrix;
  const double d1 =
      (m.topLeftCorner(n, n) - m.bottomRightCorner(n, n).conjugate()).cwiseAbs().maxCoeff();
  const double d2 =
      (m.topRightCorner(n, n) - m.bottomLeftCorner(n, n).conjugate()).cwiseAbs().maxCoeff();
  return std::max(d1, d2);
}

}  // namespace wga
