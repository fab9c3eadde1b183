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

#include <utility>
#include <vector>

#include "gatelab/linalg.hpp"

namespace gatelab {

/// Singular values, descending. Square input only.
std::vector<double> singular_values(const ComplexMatrix& a);

/// Divides by the largest singular value so the result fits inside a
/// unitary; returns (a / d1, d1). The post-selected action is unchanged,
/// only the success probability rescales by d1^{-2 photons}. Throws for the
/// zero matrix.
std::pair<ComplexMatrix, double> rescale(const ComplexMatrix& a);

struct DilationResult {
  ComplexMatrix unitary;      // (n + k) x (n + k)
  int original_dimension = 0;
  int ancilla_count = 0;      // one vacuum mode per singular value < 1 - tol
  double scale = 0.0;         // largest singular value of the input
};

/// Embeds a square matrix with singular values <= 1 + tol as the leading
/// block of a unitary: each singular direction with d < 1 - tol is coupled
/// to a fresh vacuum mode by a beam splitter of transmittivity d. Singular
/// values inside [1 - tol, 1 + tol] are clamped to 1. Values above 1 + tol
/// raise std::domain_error.
DilationResult dilate(const ComplexMatrix& a, double tol = 1e-9);

}  // namespace gatelab
