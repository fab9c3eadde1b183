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

#include "gatelab/decompose.hpp"

#include <cmath>
#include <stdexcept>

namespace gatelab {

namespace {

constexpr double kZero = 1e-14;

void push_phase(std::vector<Element>& out, int mode, double angle) {
  if (std::abs(angle) > kZero) {
    out.push_back(PhaseShift{mode, angle});
  }
}

// Emits elements for a 2x2 unitary [[a, b], [c, d]] on physical modes
// (lo < hi): a pre-phase on lo, the coupler, and a post-phase on hi.
void push_two_mode(std::vector<Element>& out, int lo, int hi, Complex a, Complex b, Complex c,
                   Complex d) {
  const double t = std::min(std::abs(a), 1.0);
  if (t > 1.0 - kZero) {
    push_phase(out, lo, std::arg(a));
    push_phase(out, hi, std::arg(d));
    return;
  }
  if (t < kZero) {
    out.push_back(BeamSplitter{lo, hi, 0.0, std::arg(b)});
    push_phase(out, hi, std::arg(c) + M_PI + std::arg(b));
    return;
  }
  push_phase(out, lo, std::arg(a));
  out.push_back(BeamSplitter{lo, hi, t, std::arg(b)});
  push_phase(out, hi, std::arg(d));
}

}  // namespace

std::vector<Element> decompose_unitary(const ComplexMatrix& u, const std::vector<int>& modes) {
  const int n = static_cast<int>(u.rows());
  if (u.cols() != n || static_cast<int>(modes.size()) != n) {
    throw std::invalid_argument("decompose_unitary: shape/mode mismatch");
  }
  if (!is_unitary(u, 1e-9)) {
    throw std::invalid_argument("decompose_unitary: input is not unitary");
  }

  // Givens elimination from the left; the rotations make each pivot real
  // positive, so the residue is a diagonal of unit phases.
  ComplexMatrix w = u;
  struct Rotation {
    int j, i;
    Complex a, b;  // pivot and eliminated entry before the rotation
    double r;
  };
  std::vector<Rotation> rotations;
  for (int j = 0; j < n - 1; ++j) {
    for (int i = n - 1; i > j; --i) {
      if (std::abs(w(i, j)) < kZero) {
        continue;
      }
      const Complex a = w(j, j);
      const Complex b = w(i, j);
      const double r = std::sqrt(std::norm(a) + std::norm(b));
      Eigen::Matrix2cd g;
      g << std::conj(a) / r, std::conj(b) / r, -b / r, a / r;
      Eigen::Matrix<Complex, 2, Eigen::Dynamic> pair(2, n);
      pair.row(0) = w.row(j);
      pair.row(1) = w.row(i);
      pair = g * pair;
      w.row(j) = pair.row(0);
      w.row(i) = pair.row(1);
      rotations.push_back({j, i, a, b, r});
    }
  }

  std::vector<Element> out;
  for (int m = 0; m < n; ++m) {
    push_phase(out, modes[m], std::arg(w(m, m)));
  }
  for (auto it = rotations.rbegin(); it != rotations.rend(); ++it) {
    // Inverse rotation [[a, -conj(b)], [b, conj(a)]] / r.
    const Complex a = it->a / it->r;
    const Complex b = it->b / it->r;
    push_two_mode(out, modes[it->j], modes[it->i], a, -std::conj(b), b, std::conj(a));
  }
  return out;
}

}  // namespace gatelab
