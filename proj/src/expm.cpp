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


// Matrix exponential by scaling and squaring (Higham 2005, "The scaling and
// squaring method for the matrix exponential revisited").

#include <array>
#include <cmath>
#include <span>

#include "wgarray/error.hpp"
#include "wgarray/kernels.hpp"

namespace wga {

namespace {

// Largest 1-norm for which the [m/m] Pade approximant is accurate to unit roundoff.
constexpr std::array<double, 5> kTheta = {1.495585217958292e-2, 2.539398330063230e-1,
                                          9.504178996162932e-1, 2.097847961257068e0,
                                          5.371920351148152e0};

constexpr std::array<double, 4> kPade3 = {120.0, 60.0, 12.0, 1.0};
constexpr std::array<double, 6> kPade5 = {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
constexpr std::array<double, 8> kPade7 = {17297280.0, 8648640.0, 1995840.0, 277200.0,
                                          25200.0,    1512.0,    56.0,      1.0};
constexpr std::array<double, 10> kPade9 = {17643225600.0, 8821612800.0, 2075673600.0,
                                           302702400.0,   30270240.0,   2162160.0,
                                           110880.0,      3960.0,       90.0,
                                           1.0};
constexpr std::array<double, 14> kPade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};

double one_norm(const ComplexMatrix& a) { return a.cwiseAbs().colwise().sum().maxCoeff(); }

// Low-degree approximants: U holds the odd powers, V the even ones.
void pade_low(const ComplexMatrix& a, std::span<const double> b, ComplexMatrix& u,
              ComplexMatrix& v) {
  const auto n = a.rows();
  const ComplexMatrix ident = ComplexMatrix::Identity(n, n);
  const ComplexMatrix a2 = a * a;
  ComplexMatrix odd = b[1] * ident;
  ComplexMatrix even = b[0] * ident;
  ComplexMatrix power = ident;
  for (std::size_t k = 2; k < b.size(); k += 2) {
    power = power * a2;
    even += b[k] * power;
    odd += b[k + 1] * power;
  }
  u = a * odd;
  v = even;
}

void pade13(const ComplexMatrix& a, ComplexMatrix& u, ComplexMatrix& v) {
  const auto& b = kPade13;
  const auto n = a.rows();
  const ComplexMatrix ident = ComplexMatrix::Identity(n, n);
  const ComplexMatrix a2 = a * a;
  const ComplexMatrix a4 = a2 * a2;
  const ComplexMatrix a6 = a4 * a2;
  const ComplexMatrix inner_u = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2);
  u = a * (inner_u + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident);
  v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 +
      b[0] * ident;
}

}  // namespace

ComplexMatrix expm(const ComplexMatrix& m, double t) {
  if (m.rows() != m.cols()) throw ValidationError("expm: matrix must be square");
  if (!m.allFinite() || !std::isfinite(t)) throw ValidationError("expm: non-finite input");
  const auto n = m.rows();
  if (n == 0) return m;

  ComplexMatrix a = m * t;
  const double norm = one_norm(a);
  ComplexMatrix u;
  ComplexMatrix v;
  int squarings = 0;
  if (norm <= kTheta[0]) {
    pade_low(a, kPade3, u, v);
  } else if (norm <= kTheta[1]) {
    pade_low(a, kPade5, u, v);
  } else if (norm <= kTheta[2]) {
    pade_low(a, kPade7, u, v);
  } else if (norm <= kTheta[3]) {
    pade_low(a, kPade9, u, v);
  } else {
    if (norm > kTheta[4]) {
      squarings = static_cast<int>(std::ceil(std::log2(norm / kTheta[4])));
      a /= std::ldexp(1.0, squarings);
    }
    pade13(a, u, v);
  }

  ComplexMatrix result = (v - u).partialPivLu().solve(v + u);
  for (int k = 0; k < squarings; ++k) result = result * result;
  return result;
}

}  // namespace wga
