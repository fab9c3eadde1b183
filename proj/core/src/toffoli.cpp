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

#include "gatelab/toffoli.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/SVD>

#include "gatelab/decompose.hpp"
#include "gatelab/dilation.hpp"
#include "gatelab/fock.hpp"
#include "gatelab/phase_gate.hpp"

namespace gatelab {

namespace {

constexpr double kPi = 3.14159265358979323846;

double largest_singular_value(const ComplexMatrix& m) {
  return Eigen::JacobiSVD<ComplexMatrix>(m).singularValues()(0);
}

}  // namespace

ComplexMatrix toffoli_bracket(double phi, double x, double y) {
  if (x == 0.0 || y == 0.0) {
    throw std::invalid_argument("toffoli_bracket: x and y must be nonzero");
  }
  const Complex q = (std::exp(Complex(0.0, phi)) - 1.0) / (x * y);
  ComplexMatrix m(3, 3);
  m << Complex(1.0), q, Complex(0.0), Complex(0.0), Complex(1.0), Complex(y), Complex(x),
      Complex(0.0), Complex(1.0);
  return m;
}

ToffoliCore toffoli_core(double phi, double x, double y, double ps_prefactor) {
  if (ps_prefactor < 0.0) {
    throw std::invalid_argument("toffoli_core: ps_prefactor must be non-negative");
  }
  ToffoliCore core;
  core.x = x;
  core.y = y;
  core.phi = phi;
  core.ps_prefactor = ps_prefactor;
  core.matrix = std::pow(ps_prefactor, 1.0 / 6.0) * toffoli_bracket(phi, x, y);

  // Simulated consistency check: the three-photon amplitude relative to the
  // product of single-photon amplitudes must carry exactly e^{i phi}.
  const OccupationVector all{1, 1, 1};
  const Complex three = transition_amplitude(core.matrix, all, all);
  Complex singles(1.0, 0.0);
  for (int m = 0; m < 3; ++m) {
    OccupationVector one(3, 0);
    one[m] = 1;
    singles *= transition_amplitude(core.matrix, one, one);
  }
  if (std::abs(three - singles * std::exp(Complex(0.0, phi))) > 1e-10 * std::abs(singles)) {
    throw std::logic_error("toffoli_core: simulated phase check failed");
  }
  return core;
}

ConstraintReport constraint_report(const ToffoliCore& core, double tol) {
  const ComplexMatrix h = core.matrix * core.matrix.adjoint();
  const double tr = h.trace().real();
  double e2 = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      e2 += (h(i, i) * h(j, j) - h(i, j) * h(j, i)).real();
    }
  }
  const double det = h.determinant().real();

  ConstraintReport report;
  // p(l) = -l^3 + tr l^2 - e2 l + det for the 3x3 Hermitian h.
  report.char_poly_at_1 = -1.0 + tr - e2 + det;
  report.derivative_values = {-3.0 + 2.0 * tr - e2, -6.0 + 2.0 * tr};

  Eigen::JacobiSVD<ComplexMatrix> svd(core.matrix);
  for (int k = 0; k < 3; ++k) {
    report.singular_values[k] = svd.singularValues()(k);
  }

  // For n = 3 the leading derivative p'''(1) = -6 is negative, so feasibility
  // needs p(1) = 0 with p'(1) <= 0 and p''(1) <= 0.
  const double scale = std::max(1.0, tr);
  report.alternating_sign_ok = std::abs(report.char_poly_at_1) <= tol * scale * scale * scale &&
                               report.derivative_values[0] <= tol * scale * scale &&
                               report.derivative_values[1] <= tol * scale;
  return report;
}

ToffoliOptimum optimize_toffoli(double phi, const ToffoliOptions& opts) {
  if (!(phi >= 0.0 && phi <= kPi)) {
    throw std::domain_error("optimize_toffoli: phi must lie in [0, pi]");
  }
  if (phi < kPhaseEpsilon) {
    return {0.0, 0.0, 1.0};  // do-nothing network, no core
  }

  const auto objective = [&](double x, double y) {
    return largest_singular_value(toffoli_bracket(phi, x, y));
  };

  double bx = 1.0, by = 1.0, bval = objective(1.0, 1.0);
  for (int i = 0; i < opts.grid_points; ++i) {
    const double x = -opts.bound + 2.0 * opts.bound * i / (opts.grid_points - 1);
    if (std::abs(x) < opts.exclusion) {
      continue;
    }
    for (int j = 0; j < opts.grid_points; ++j) {
      const double y = -opts.bound + 2.0 * opts.bound * j / (opts.grid_points - 1);
      if (std::abs(y) < opts.exclusion) {
        continue;
      }
      const double v = objective(x, y);
      if (v < bval) {
        bval = v;
        bx = x;
        by = y;
      }
    }
  }

  // Nelder-Mead on sigma_max, guarded against the excluded axes.
  const auto guarded = [&](double x, double y) {
    if (std::abs(x) < opts.exclusion || std::abs(y) < opts.exclusion) {
      return 1e6;
    }
    return objective(x, y);
  };
  struct Vertex {
    double x, y, f;
  };
  const double step = 2.0 * opts.bound / (opts.grid_points - 1);
  std::array<Vertex, 3> simplex{Vertex{bx, by, bval},
                                Vertex{bx + step, by, guarded(bx + step, by)},
                                Vertex{bx, by + step, guarded(bx, by + step)}};
  for (int it = 0; it < opts.simplex_iters; ++it) {
    std::sort(simplex.begin(), simplex.end(),
              [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
    const double cx = (simplex[0].x + simplex[1].x) / 2.0;
    const double cy = (simplex[0].y + simplex[1].y) / 2.0;
    const double rx = cx + (cx - simplex[2].x);
    const double ry = cy + (cy - simplex[2].y);
    const double fr = guarded(rx, ry);
    if (fr < simplex[0].f) {
      const double ex = cx + 2.0 * (cx - simplex[2].x);
      const double ey = cy + 2.0 * (cy - simplex[2].y);
      const double fe = guarded(ex, ey);
      simplex[2] = fe < fr ? Vertex{ex, ey, fe} : Vertex{rx, ry, fr};
    } else if (fr < simplex[1].f) {
      simplex[2] = {rx, ry, fr};
    } else {
      const double kx = cx + 0.5 * (simplex[2].x - cx);
      const double ky = cy + 0.5 * (simplex[2].y - cy);
      const double fk = guarded(kx, ky);
      if (fk < simplex[2].f) {
        simplex[2] = {kx, ky, fk};
      } else {
        for (int v = 1; v < 3; ++v) {
          simplex[v].x = simplex[0].x + 0.5 * (simplex[v].x - simplex[0].x);
          simplex[v].y = simplex[0].y + 0.5 * (simplex[v].y - simplex[0].y);
          simplex[v].f = guarded(simplex[v].x, simplex[v].y);
        }
      }
    }
  }
  std::sort(simplex.begin(), simplex.end(),
            [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
  bx = simplex[0].x;
  by = simplex[0].y;
  bval = simplex[0].f;

  double dx = step;
  for (int it = 0; it < opts.polish_iters; ++it) {
    bool improved = false;
    const double candidates[4][2] = {{bx + dx, by}, {bx - dx, by}, {bx, by + dx}, {bx, by - dx}};
    for (const auto& c : candidates) {
      const double v = guarded(c[0], c[1]);
      if (v < bval) {
        bval = v;
        bx = c[0];
        by = c[1];
        improved = true;
      }
    }
    if (!improved) {
      dx *= 0.5;
    }
  }

  // Certify feasibility of the reported optimum: with the prefactor pinned
  // to the rescaling value, the characteristic-polynomial conditions must
  // hold, making the result a valid lower bound.
  const double ps = std::pow(bval, -6.0);
  const ConstraintReport certificate = constraint_report(toffoli_core(phi, bx, by, ps), 1e-8);
  if (!certificate.alternating_sign_ok) {
    throw std::logic_error("optimize_toffoli: optimum failed the feasibility certificate");
  }
  return {bx, by, ps};
}

NetworkDescription build_toffoli_network(double phi, double x, double y) {
  if (!(phi >= 0.0 && phi <= kPi)) {
    throw std::domain_error("build_toffoli_network: phi must lie in [0, pi]");
  }
  NetworkDescription net;
  net.qubits = {{0, 1}, {2, 3}, {4, 5}};
  if (phi < kPhaseEpsilon) {
    net.mode_count = 6;
    return net;
  }

  const auto [core, scale] = rescale(toffoli_bracket(phi, x, y));
  const double ps = std::pow(scale, -6.0);
  const DilationResult dil = dilate(core);
  const int k = dil.ancilla_count;
  net.mode_count = 6 + k + 3;

  std::vector<int> core_modes = {1, 3, 5};
  for (int a = 0; a < k; ++a) {
    core_modes.push_back(6 + a);
    net.ancillas.push_back(6 + a);
  }
  net.elements = decompose_unitary(dil.unitary, core_modes);

  const double r = std::pow(ps, 1.0 / 6.0);
  const int bystander_base = 6 + k;
  const int zero_modes[3] = {0, 2, 4};
  for (int q = 0; q < 3; ++q) {
    net.elements.push_back(BeamSplitter{zero_modes[q], bystander_base + q, r, 0.0});
    net.ancillas.push_back(bystander_base + q);
  }
  return net;
}

}  // namespace gatelab
