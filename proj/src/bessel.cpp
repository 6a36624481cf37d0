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


#include <cmath>
#include <string>

#include "wgarray/error.hpp"
#include "wgarray/kernels.hpp"

namespace wga {

namespace {

constexpr int kMaxOrder = 60;
constexpr double kMaxArgument = 50.0;
constexpr double kSeriesCutoff = 1.0;
constexpr double kRescale = 1e250;

double ascending_series(int n, double x) {
  const double half = 0.5 * x;
  double term = 1.0;
  for (int k = 1; k <= n; ++k) term *= half / k;
  double sum = term;
  const double q = -half * half;
  for (int k = 1; k < 200; ++k) {
    term *= q / (static_cast<double>(k) * (n + k));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

// Miller's algorithm: recur J_{k-1} = (2k/x) J_k - J_{k+1} downward from a
// start index well above both n and |x|, then normalize with
// J_0 + 2 sum_k J_{2k} = 1. Valid for x > 0.
double miller(int n, double x) {
  const double base = std::max(static_cast<double>(n), std::ceil(x));
  const int start = 2 * static_cast<int>((base + 20.0 + std::sqrt(40.0 * base)) / 2.0);
  double next = 0.0;  // J_{k+1}
  double cur = 1e-300;  // J_k
  double wanted = 0.0;
  double norm = 0.0;
  for (int k = start; k > 0; --k) {
    const double prev = (2.0 * k / x) * cur - next;  // J_{k-1}
    next = cur;
    cur = prev;
    if (std::abs(cur) > kRescale) {
      cur /= kRescale;
      next /= kRescale;
      wanted /= kRescale;
      norm /= kRescale;
    }
    if (k - 1 == n) wanted = cur;
    if ((k - 1) % 2 == 0 && k - 1 > 0) norm += 2.0 * cur;
  }
  norm += cur;  // J_0
  return wanted / norm;
}

}  // namespace

double bessel_j(int order, double x) {
  if (order < 0 || order > kMaxOrder) {
    throw ValidationError("bessel_j: order " + std::to_string(order) + " outside [0, 60]");
  }
  if (!std::isfinite(x) || std::abs(x) > kMaxArgument) {
    throw ValidationError("bessel_j: argument outside [-50, 50]");
  }
  if (x == 0.0) return order == 0 ? 1.0 : 0.0;
  const double sign = (x < 0.0 && order % 2 == 1) ? -1.0 : 1.0;
  const double ax = std::abs(x);
  const double value = ax <= kSeriesCutoff ? ascending_series(order, ax) : miller(order, ax);
  return sign * value;
}

}  // namespace wga
