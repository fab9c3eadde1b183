// Copyright 2026 The gatelab developers
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

#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "gatelab/fock.hpp"
#include "gatelab/linalg.hpp"

namespace testutil {

using gatelab::Complex;
using gatelab::ComplexMatrix;
using gatelab::OccupationVector;

inline std::mt19937_64 rng(unsigned long long seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& gen, double lo = -1.0, double hi = 1.0) {
  const double unit = double(gen() >> 11) / 9007199254740992.0;
  return lo + (hi - lo) * unit;
}

inline ComplexMatrix random_complex(int n, std::mt19937_64& gen) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m(i, j) = Complex(uniform(gen), uniform(gen));
    }
  }
  return m;
}

inline ComplexMatrix random_unitary(int n, std::mt19937_64& gen) {
  Eigen::HouseholderQR<ComplexMatrix> qr(random_complex(n, gen));
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < n; ++k) {
    const Complex d = r(k, k);
    q.col(k) *= std::abs(d) > 0 ? d / std::abs(d) : Complex(1.0, 0.0);
  }
  return q;
}

inline ComplexMatrix random_subunitary(int n, std::mt19937_64& gen, double max_singular = 1.0) {
  ComplexMatrix u = random_unitary(n, gen);
  ComplexMatrix v = random_unitary(n, gen);
  Eigen::VectorXd d(n);
  for (int k = 0; k < n; ++k) {
    d(k) = max_singular * (0.05 + 0.95 * (uniform(gen) + 1.0) / 2.0);
  }
  return u * d.asDiagonal() * v.adjoint();
}

// All occupation vectors of `modes` modes with `photons` photons in total.
inline std::vector<OccupationVector> enumerate_occupations(int modes, int photons) {
  std::vector<OccupationVector> out;
  OccupationVector occ(modes, 0);
  const std::function<void(int, int)> walk = [&](int mode, int left) {
    if (mode == modes - 1) {
      occ[mode] = left;
      out.push_back(occ);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      occ[mode] = k;
      walk(mode + 1, left - k);
    }
  };
  walk(0, photons);
  return out;
}

// Independent amplitude oracle by explicit operator substitution: expands
// prod_i (sum_j u_ji a_j)^{n_i} term by term and reads off one coefficient.
// No permanents involved.
inline Complex substitution_amplitude(const ComplexMatrix& u, const OccupationVector& input,
                                      const OccupationVector& output) {
  const int dim = static_cast<int>(u.rows());
  std::map<OccupationVector, Complex> poly{{OccupationVector(dim, 0), Complex(1.0, 0.0)}};
  for (int mode = 0; mode < dim; ++mode) {
    for (int rep = 0; rep < input[mode]; ++rep) {
      std::map<OccupationVector, Complex> next;
      for (const auto& [expo, coeff] : poly) {
        for (int target = 0; target < dim; ++target) {
          OccupationVector bumped = expo;
          ++bumped[target];
          next[bumped] += coeff * u(target, mode);
        }
      }
      poly = std::move(next);
    }
  }
  auto it = poly.find(output);
  if (it == poly.end()) {
    return Complex(0.0, 0.0);
  }
  double fac_in = 1.0, fac_out = 1.0;
  for (int c : input) {
    for (int k = 2; k <= c; ++k) fac_in *= k;
  }
  for (int c : output) {
    for (int k = 2; k <= c; ++k) fac_out *= k;
  }
  return it->second * std::sqrt(fac_out / fac_in);
}

}  // namespace testutil
