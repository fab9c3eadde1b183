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

#include "gatelab/state_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace gatelab {

TwoPhotonStateMatrix from_polynomial(const CreationPolynomial& p) {
  if (p.zero() || p.degree() != 2 || !p.is_homogeneous()) {
    throw std::invalid_argument("from_polynomial: need a homogeneous degree-2 polynomial");
  }
  const int m = p.mode_count();
  TwoPhotonStateMatrix sm;
  sm.m = ComplexMatrix::Zero(m, m);
  for (const auto& [expo, coeff] : p.terms()) {
    int first = -1, second = -1;
    for (int v = 0; v < m; ++v) {
      for (int k = 0; k < expo[v]; ++k) {
        (first < 0 ? first : second) = v;
      }
    }
    if (first == second) {
      sm.m(first, first) = coeff;
    } else {
      sm.m(first, second) = coeff / 2.0;
      sm.m(second, first) = coeff / 2.0;
    }
  }
  return sm;
}

CreationPolynomial to_polynomial(const TwoPhotonStateMatrix& sm) {
  const int m = sm.mode_count();
  CreationPolynomial p(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      const Complex coeff = i == j ? sm.m(i, i) : sm.m(i, j) + sm.m(j, i);
      if (coeff != Complex(0.0, 0.0)) {
        std::vector<int> expo(m, 0);
        ++expo[i];
        ++expo[j];
        p.add_term(expo, coeff);
      }
    }
  }
  return p;
}

FockState to_fock_state(const TwoPhotonStateMatrix& sm) {
  const int m = sm.mode_count();
  FockState s(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      std::vector<int> occ(m, 0);
      Complex amp;
      if (i == j) {
        occ[i] = 2;
        amp = std::sqrt(2.0) * sm.m(i, i);
      } else {
        occ[i] = occ[j] = 1;
        amp = sm.m(i, j) + sm.m(j, i);
      }
      if (amp != Complex(0.0, 0.0)) {
        s.add(occ, amp);
      }
    }
  }
  return s;
}

TwoPhotonStateMatrix transform(const TwoPhotonStateMatrix& sm, const ComplexMatrix& u) {
  if (u.rows() != sm.mode_count() || u.cols() != sm.mode_count()) {
    throw std::invalid_argument("transform: dimension mismatch");
  }
  if (!is_unitary(u, 1e-8)) {
    throw std::invalid_argument("transform: matrix is not unitary");
  }
  return {u * sm.m * u.transpose()};
}

int photon_class_rank(const TwoPhotonStateMatrix& sm, double tol) {
  Eigen::JacobiSVD<ComplexMatrix> svd(sm.m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) <= 0.0) {
    return 0;
  }
  int rank = 0;
  for (int k = 0; k < s.size(); ++k) {
    if (s(k) > tol * s(0)) {
      ++rank;
    }
  }
  return rank;
}

int min_additional_photons(int rank_in, int rank_target) {
  if (rank_in < 0 || rank_target < 0) {
    throw std::invalid_argument("min_additional_photons: ranks must be non-negative");
  }
  return std::max(0, rank_target - rank_in);
}

TakagiFactorization takagi(const ComplexMatrix& symmetric) {
  const int n = static_cast<int>(symmetric.rows());
  if (symmetric.cols() != n) {
    throw std::invalid_argument("takagi: matrix must be square");
  }
  if ((symmetric - symmetric.transpose()).norm() > 1e-12 * std::max(1.0, symmetric.norm())) {
    throw std::invalid_argument("takagi: matrix must be symmetric");
  }

  // Real embedding: eigenvectors (x; y) of [[Re, Im], [Im, -Re]] with
  // eigenvalue s >= 0 give con-eigenvectors u = x + i y with M conj(u) = s u.
  Eigen::MatrixXd block(2 * n, 2 * n);
  block.topLeftCorner(n, n) = symmetric.real();
  block.topRightCorner(n, n) = symmetric.imag();
  block.bottomLeftCorner(n, n) = symmetric.imag();
  block.bottomRightCorner(n, n) = -symmetric.real();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(block);

  TakagiFactorization out;
  out.unitary.resize(n, n);
  out.values.resize(n);
  const double top = std::max(eig.eigenvalues().cwiseAbs().maxCoeff(), 1.0);
  int filled = 0;
  for (int k = 2 * n - 1; k >= 0 && filled < n; --k) {  // descending eigenvalues
    const double val = eig.eigenvalues()(k);
    if (val <= 1e-13 * top) {
      break;  // the zero cluster pairs each vector with a parallel image
    }
    ComplexVector u(n);
    for (int i = 0; i < n; ++i) {
      u(i) = Complex(eig.eigenvectors()(i, k), eig.eigenvectors()(n + i, k));
    }
    out.unitary.col(filled) = u / u.norm();
    out.values(filled) = val;
    ++filled;
  }
  // Kernel columns: any orthonormal completion of the positive part works.
  if (filled == 0) {
    out.unitary = ComplexMatrix::Identity(n, n);
    out.values.setZero();
  } else if (filled < n) {
    Eigen::HouseholderQR<ComplexMatrix> qr(out.unitary.leftCols(filled).eval());
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
    for (int k = filled; k < n; ++k) {
      out.unitary.col(k) = q.col(k);
      out.values(k) = 0.0;
    }
  }
  return out;
}

}  // namespace gatelab
