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

#include "gatelab/dilation.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/SVD>

namespace gatelab {

std::vector<double> singular_values(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("singular_values: matrix must be square");
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

std::pair<ComplexMatrix, double> rescale(const ComplexMatrix& a) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw std::invalid_argument("rescale: matrix must be square and non-empty");
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  const double d1 = svd.singularValues()(0);
  if (d1 <= 0.0) {
    throw std::invalid_argument("rescale: zero matrix");
  }
  return {a / d1, d1};
}

DilationResult dilate(const ComplexMatrix& a, double tol) {
  const int n = static_cast<int>(a.rows());
  if (a.cols() != n || n == 0) {
    throw std::invalid_argument("dilate: matrix must be square and non-empty");
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::VectorXd d = svd.singularValues();
  const double scale = d(0);
  if (scale > 1.0 + tol) {
    throw std::domain_error("dilate: singular value above 1, rescale first");
  }

  std::vector<int> coupled;
  for (int k = 0; k < n; ++k) {
    if (d(k) >= 1.0 - tol) {
      d(k) = 1.0;  // clamp the boundary band to keep the result exactly unitary
    } else {
      coupled.push_back(k);
    }
  }
  const int extra = static_cast<int>(coupled.size());
  const int total = n + extra;

  ComplexMatrix mid = ComplexMatrix::Identity(total, total);
  for (int k = 0; k < n; ++k) {
    mid(k, k) = d(k);
  }
  for (int idx = 0; idx < extra; ++idx) {
    const int k = coupled[idx];
    const int anc = n + idx;
    const double c = std::sqrt(std::max(1.0 - d(k) * d(k), 0.0));
    mid(k, anc) = c;
    mid(anc, k) = c;
    mid(anc, anc) = -d(k);
  }

  ComplexMatrix left = ComplexMatrix::Identity(total, total);
  left.topLeftCorner(n, n) = svd.matrixU();
  ComplexMatrix right = ComplexMatrix::Identity(total, total);
  right.topLeftCorner(n, n) = svd.matrixV().adjoint();

  DilationResult result;
  result.unitary = left * mid * right;
  result.original_dimension = n;
  result.ancilla_count = extra;
  result.scale = scale;
  return result;
}

}  // namespace gatelab
