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

#include <variant>
#include <vector>

#include "gatelab/fock.hpp"
#include "gatelab/linalg.hpp"

namespace gatelab {

/// Two-mode coupler on modes a < b acting as
///   [[t, r e^{i phase}], [-r e^{-i phase}, t]],  r = sqrt(1 - t^2),
/// with real transmittivity t in [0, 1].
struct BeamSplitter {
  int mode_a = 0;
  int mode_b = 0;
  double transmittivity = 1.0;
  double phase = 0.0;
};

struct PhaseShift {
  int mode = 0;
  double angle = 0.0;
};

using Element = std::variant<BeamSplitter, PhaseShift>;

/// A physical network: ordered optical elements plus the dual-rail roles of
/// the modes. Ancilla modes are vacuum at the input and post-selected on
/// vacuum at the output.
struct NetworkDescription {
  int mode_count = 0;
  std::vector<Element> elements;
  std::vector<std::pair<int, int>> qubits;  // (logical-0 mode, logical-1 mode)
  std::vector<int> ancillas;

  DualRailLayout layout() const;
  /// Throws std::invalid_argument on out-of-range or malformed entries.
  void validate() const;
};

ComplexMatrix element_matrix(const Element& e, int dim);

/// Composes the element list into a single mode matrix (first element acts
/// first). Validates the network.
ComplexMatrix compose_elements(const NetworkDescription& net);

struct VerificationReport {
  ComplexMatrix induced;                // raw induced logical operator
  std::vector<double> basis_success;    // per-basis-state success probability
  double success_probability = 0.0;     // mean of basis_success
  double max_target_deviation = 0.0;    // after global-phase alignment
  double uniformity_deviation = 0.0;
  double linearity_deviation = 0.0;
  bool passed = false;
};

/// Simulates the network and compares the induced operator against the
/// diagonal target diag(1, ..., 1, e^{i phi}) on the network's qubits. Also
/// propagates two superposition inputs (uniform and a fixed pseudo-random
/// state) and checks them against the induced operator.
VerificationReport verify_network(const NetworkDescription& net, double phi, double tol);

}  // namespace gatelab
