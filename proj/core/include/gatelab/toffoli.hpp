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

#include <array>

#include "gatelab/network.hpp"

namespace gatelab {

// Generalized Toffoli diag(1, ..., 1, e^{i phi}) on three dual-rail qubits.

/// The unscaled three-mode core
///   [[1, (e^{i phi}-1)/(x y), 0], [0, 1, y], [x, 0, 1]],  x, y real nonzero.
/// Every principal submatrix permanent is 1 and the full permanent is
/// e^{i phi}, which is what makes all eight logical amplitudes uniform once
/// the prefactor and bystander damping are attached.
ComplexMatrix toffoli_bracket(double phi, double x, double y);

struct ToffoliCore {
  double x = 1.0;
  double y = 1.0;
  double phi = 0.0;
  ComplexMatrix matrix;  // ps_prefactor^{1/6} * bracket
  double ps_prefactor = 1.0;
};

/// Builds the scaled core and checks by simulation (permanent amplitudes)
/// that the three-photon action carries phase e^{i phi} relative to the
/// single-photon amplitudes. Throws on zero parameters or a failed check.
ToffoliCore toffoli_core(double phi, double x, double y, double ps_prefactor = 1.0);

/// Feasibility test through the characteristic polynomial of A A^dag:
/// p(1) = 0 pins one singular value to 1, and all derivatives sharing the
/// sign of p^{(n)}(1) at lambda = 1 forces the rest below 1. For n = 3 that
/// means p'(1) <= 0 and p''(1) <= 0.
struct ConstraintReport {
  double char_poly_at_1 = 0.0;
  std::array<double, 2> derivative_values{};  // p'(1), p''(1)
  bool alternating_sign_ok = false;
  std::array<double, 3> singular_values{};
};

ConstraintReport constraint_report(const ToffoliCore& core, double tol = 1e-9);

struct ToffoliOptions {
  int grid_points = 81;          // coarse grid per axis over [-bound, bound]
  double bound = 4.0;
  double exclusion = 1e-3;       // skip |x| or |y| below this
  int simplex_iters = 400;       // Nelder-Mead budget
  int polish_iters = 70;         // compass-search halvings
  unsigned long long seed = 42;  // reserved; the search is deterministic
};

struct ToffoliOptimum {
  double x = 0.0;
  double y = 0.0;
  double ps = 1.0;
};

/// Maximizes ps(x, y) = sigma_max(bracket)^{-6} (global rescaling pins the
/// largest singular value to 1; three photons give the sixth power) by a
/// deterministic coarse grid plus Nelder-Mead and compass polish. At phi = pi
/// the optimum is 1 + 3(2^{1/3} - 2^{2/3}) ~= 1/57. For phi < kPhaseEpsilon
/// returns the identity solution {0, 0, 1}.
ToffoliOptimum optimize_toffoli(double phi, const ToffoliOptions& opts = {});

/// Full network: qubits on modes (0,1), (2,3), (4,5), the rescaled core on
/// the logical-1 modes dilated with vacuum ancillas, and three bystander
/// beam splitters of amplitude ps^{1/6}. Verified by simulation against the
/// 8x8 diagonal target.
NetworkDescription build_toffoli_network(double phi, double x, double y);

}  // namespace gatelab
