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

#include <map>
#include <utility>
#include <vector>

#include "gatelab/linalg.hpp"

namespace gatelab {

/// Photon counts per mode.
using OccupationVector = std::vector<int>;

/// Sparse few-photon state: a map from occupation vectors to complex
/// amplitudes. All stored terms share the mode count and the total photon
/// number. States may be sub-normalized (e.g. after post-selection).
class FockState {
 public:
  static constexpr double kPruneThreshold = 1e-15;

  explicit FockState(int mode_count);

  static FockState vacuum(int mode_count);
  /// Single basis state |occ> with the given amplitude.
  static FockState basis_state(const OccupationVector& occ, Complex amplitude = 1.0);

  /// Adds amplitude to one occupation pattern. Throws if the pattern length
  /// or its photon total is inconsistent with the existing terms.
  void add(const OccupationVector& occ, Complex amplitude);

  Complex amplitude(const OccupationVector& occ) const;
  double squared_norm() const;
  int mode_count() const { return mode_count_; }
  /// Total photon number; -1 for the empty state.
  int total_photons() const;
  bool empty() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<OccupationVector, Complex>& terms() const { return terms_; }

  /// Drops terms with |amplitude| <= eps.
  void prune(double eps = kPruneThreshold);

 private:
  int mode_count_;
  std::map<OccupationVector, Complex> terms_;
};

/// Amplitude <output| U |input> for photons scattering through the mode
/// matrix u: per(u[output, input]) / sqrt(prod in_i! * prod out_j!), where
/// the submatrix repeats row i out_i times and column j in_j times. Returns
/// 0 when the photon totals differ. Works for sub-unitary u as a formal
/// amplitude.
Complex transition_amplitude(const ComplexMatrix& u, const OccupationVector& input,
                             const OccupationVector& output);

/// Evolves a state through the mode matrix u by substituting each creation
/// operator with its image column. Norm-preserving for unitary u.
FockState apply_network(const ComplexMatrix& u, const FockState& s);

/// Projects the listed modes onto the given occupation pattern. Returns the
/// unnormalized state on the remaining modes and the squared norm kept
/// (the success probability). An empty result has probability 0.
std::pair<FockState, double> post_select(const FockState& s, const std::vector<int>& modes,
                                         const OccupationVector& pattern);

/// Dual-rail register layout: per qubit the (logical-0, logical-1) mode pair,
/// plus ancilla modes that are vacuum-initialized and vacuum-post-selected.
struct DualRailLayout {
  std::vector<std::pair<int, int>> qubits;
  std::vector<int> ancillas;

  int mode_count() const;
  /// Throws if indices overlap, fall out of range, or do not cover all modes.
  void validate(int dim) const;
};

/// The 2^n x 2^n operator induced on the computational subspace: entry (j,k)
/// is the amplitude from basis input k to output j with all ancillas
/// post-selected on vacuum. Qubit 0 is the most significant bit.
ComplexMatrix induced_logical_operator(const ComplexMatrix& u, const DualRailLayout& layout);

}  // namespace gatelab
