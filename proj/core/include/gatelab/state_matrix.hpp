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

#include "gatelab/fock.hpp"
#include "gatelab/linalg.hpp"
#include "gatelab/polynomial.hpp"

namespace gatelab {

/// Symmetric matrix form of a two-photon state: the state is
/// sum_{ij} M_ij a_i^dag a_j^dag |vac>. The rank of M classifies which
/// states are reachable from one another by linear optics.
struct TwoPhotonStateMatrix {
  ComplexMatrix m;

  int mode_count() const { return static_cast<int>(m.rows()); }
};

/// Builds M from a homogeneous degree-2 polynomial (M_ij + M_ji matches the
/// a_i a_j coefficient). Throws for other degrees.
TwoPhotonStateMatrix from_polynomial(const CreationPolynomial& p);
CreationPolynomial to_polynomial(const TwoPhotonStateMatrix& sm);

/// Two-photon FockState with amplitudes 2 M_ij (i < j) and sqrt(2) M_ii.
FockState to_fock_state(const TwoPhotonStateMatrix& sm);

/// State matrix after sending the state through the network u: M -> u M u^T.
/// Requires unitary u of matching dimension; symmetry and rank are preserved.
TwoPhotonStateMatrix transform(const TwoPhotonStateMatrix& sm, const ComplexMatrix& u);

/// Numerical rank with threshold tol * sigma_max.
int photon_class_rank(const TwoPhotonStateMatrix& sm, double tol = 1e-10);

/// Extra single photons needed to raise the state-matrix rank: one per unit
/// of increase, none to decrease (vacuum modes suffice for that).
int min_additional_photons(int rank_in, int rank_target);

/// Autonne-Takagi factorization of a complex symmetric matrix,
/// M = U diag(values) U^T with unitary U and values >= 0 descending.
/// transform(M, U^dag) is then diagonal.
struct TakagiFactorization {
  ComplexMatrix unitary;
  Eigen::VectorXd values;
};

TakagiFactorization takagi(const ComplexMatrix& symmetric);

}  // namespace gatelab
