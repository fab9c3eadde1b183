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

#include <vector>

#include "gatelab/network.hpp"

namespace gatelab {

// Synthesis of the optimal post-selected dual-rail controlled-phase gate
// diag(1, 1, 1, e^{i phi}) for phi in [0, pi], with vacuum ancillas only.

/// Below this angle the synthesizer returns the exact identity network.
inline constexpr double kPhaseEpsilon = 1e-8;

/// Optimal success probability
///   ps(phi) = (1 + 2|sin(phi/2)|
///              + 2^{3/2} sin((pi-phi)/4) sqrt(|sin(phi/2)|))^{-2}.
/// ps(0) = 1 and ps(pi) = ps(pi/3) = 1/9; the minimum sits near phi = 2.05.
/// Throws std::domain_error outside [0, pi].
double success_probability(double phi);

/// Two-mode core ps^{1/4} [[x, (e^{i phi}-1) x/y], [y/x, 1/x]] with free
/// nonzero complex x, y. Its permanent over the diagonal product always
/// equals e^{i phi}.
struct CoreSolution {
  Complex x;
  Complex y;
  ComplexMatrix matrix;      // 2x2
  double ps_prefactor = 1.0;
};

CoreSolution core_matrix(double phi, Complex x, Complex y, double ps_prefactor = 1.0);

/// Optimal unitary completion of the core on three modes. The third-column
/// entries are a13 = conj(a23) = e^{i pi/2} t with t^2 = A1 A2^dag, the row
/// phases fixed so that A1 A2^dag is real positive (|y| = (2(1-cos phi))^{1/4},
/// arg y = (phi+pi)/4). Rows are normalized by their norms |A'1|, |A'2| and
/// completed with the conjugated cross product, so
/// (|A'1| |A'2|)^{-2} = success_probability(phi).
struct OptimalExtension {
  Complex a13;
  Complex a23;
  double row_norm_1 = 1.0;
  double row_norm_2 = 1.0;
  ComplexMatrix unitary3;  // 3x3

  double implied_success_probability() const;
};

OptimalExtension optimal_extension(double phi);

/// Closed-form SVD data of the core with x = 1, y = -sqrt(e^{i phi} - 1):
///   sigma_pm = sqrt(1 + 2 sin(phi/2) +- 2 (2-2cos phi)^{1/4} cos((phi+pi)/4))
///   r_v = sigma_minus / sigma_plus
///   phi_pm = arccot[cot((phi+pi)/4) +- ((2-2cos phi)^{1/4} sin((phi+pi)/4))^{-1}]
/// with arccot valued in (0, pi). After rescaling by sigma_plus the core
/// factors as u_lambda2 * diag(1, r_v e^{i(reflection_phase - pi)}) * u_lambda1,
/// where u_lambda1 is the fixed balanced coupler below and
/// u_lambda2 = u_lambda1^{-1} e^{i phi_plus sigma_z}. The pi offset on the
/// damped arm comes from the (0, pi) branch of arccot; reflection_phase
/// itself is phi_plus + phi_minus. 1/sigma_plus^4 equals
/// success_probability(phi).
struct SvdReport {
  double sigma_plus = 1.0;
  double sigma_minus = 1.0;
  double r_v = 1.0;
  double phi_plus = 0.0;
  double phi_minus = 0.0;
  double reflection_phase = 0.0;  // phi_plus + phi_minus
  Eigen::Matrix2cd u_lambda1;     // (1/sqrt 2) [[-1, 1], [-1, -1]]
  Eigen::Matrix2cd u_lambda2;
};

SvdReport svd_decomposition(double phi);

/// Seven-mode gate network: dual-rail qubits on modes (0,1) and (2,3), the
/// core on the logical-1 modes 1 and 3, a vacuum ancilla 4 coupled by the
/// central beam splitter, and bystander compensation of amplitude
/// ps^{1/4} on modes (0,5) and (2,6). The induced logical operator is
/// exactly ps^{1/2} diag(1, 1, 1, e^{i phi}). For phi < kPhaseEpsilon the
/// element list is empty (identity network).
NetworkDescription build_network(double phi);

/// The two single-beam-splitter gates: mixing angles theta solving
/// 1 - 2 sin^2(theta) = sin^2(theta), i.e. theta = +-asin(3^{-1/2}), paired
/// with the controlled phase they realize. The positive root is the
/// sign-flip gate (phi = pi), the mirrored root the trivial class (phi = 0);
/// no single beam splitter reaches any phase strictly between.
std::vector<std::pair<double, double>> single_bs_solutions();

struct OptimumOptions {
  int grid_scale = 160;           // grid resolution in |y|^2
  int grid_ext = 160;             // grid resolution in the extension magnitude
  int refine_steps = 80;          // compass-search halvings
  unsigned long long seed = 42;   // reserved; the search is deterministic
};

/// Independent maximization of the success probability over the free core
/// scale |y| and the extension magnitude, with the extension pair forced to
/// cancel A1 A2^dag. Deterministic grid plus compass refinement; the result
/// is a lower bound on the optimum. Below kPhaseEpsilon the identity network
/// is returned as the optimum (probability 1) without searching.
double numeric_optimum(double phi, const OptimumOptions& opts = {});

}  // namespace gatelab
