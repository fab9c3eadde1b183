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

#include "gatelab/phase_gate.hpp"

#include <cmath>
#include <stdexcept>

namespace gatelab {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_phi_range(double phi) {
  if (!(phi >= 0.0 && phi <= kPi)) {
    throw std::domain_error("phase gate: phi must lie in [0, pi]");
  }
}

// arccot with values in (0, pi); accepts +-inf.
double arccot(double z) {
  return std::atan2(1.0, z);
}

}  // namespace

double success_probability(double phi) {
  check_phi_range(phi);
  const double s = std::abs(std::sin(phi / 2.0));
  const double denom = 1.0 + 2.0 * s + std::pow(2.0, 1.5) * std::sin((kPi - phi) / 4.0) * std::sqrt(s);
  return 1.0 / (denom * denom);
}

CoreSolution core_matrix(double phi, Complex x, Complex y, double ps_prefactor) {
  check_phi_range(phi);
  if (x == Complex(0.0, 0.0) || y == Complex(0.0, 0.0)) {
    throw std::invalid_argument("core_matrix: x and y must be nonzero");
  }
  if (ps_prefactor < 0.0) {
    throw std::invalid_argument("core_matrix: ps_prefactor must be non-negative");
  }
  const Complex e = std::exp(Complex(0.0, phi)) - 1.0;
  const double root = std::pow(ps_prefactor, 0.25);
  CoreSolution core;
  core.x = x;
  core.y = y;
  core.ps_prefactor = ps_prefactor;
  core.matrix.resize(2, 2);
  core.matrix << root * x, root * e * x / y, root * y / x, root / x;
  return core;
}

double OptimalExtension::implied_success_probability() const {
  const double f = row_norm_1 * row_norm_2;
  return 1.0 / (f * f);
}

OptimalExtension optimal_extension(double phi) {
  check_phi_range(phi);
  OptimalExtension ext;
  if (phi < kPhaseEpsilon) {
    ext.a13 = ext.a23 = 0.0;
    ext.row_norm_1 = ext.row_norm_2 = 1.0;
    ext.unitary3 = ComplexMatrix::Identity(3, 3);
    return ext;
  }

  // Scale |y| = (2(1-cos phi))^{1/4}; the phase (phi+pi)/4 makes A1 A2^dag
  // real positive, so the third-column pair e^{+-i pi/2} t cancels it.
  const double ymag = std::pow(2.0 * (1.0 - std::cos(phi)), 0.25);
  const Complex y = ymag * std::exp(Complex(0.0, (phi + kPi) / 4.0));
  const Complex e = std::exp(Complex(0.0, phi)) - 1.0;

  Eigen::RowVector2cd a1, a2;
  a1 << Complex(1.0, 0.0), e / y;
  a2 << y, Complex(1.0, 0.0);
  // Closed form of the overlap; exact at the endpoints where the numeric
  // product only cancels to roundoff.
  const double t2 =
      std::pow(2.0, 1.5) * std::sin((kPi - phi) / 4.0) * std::sqrt(std::sin(phi / 2.0));
  const Complex overlap = (a1 * a2.adjoint())(0, 0);
  if (std::abs(overlap - t2) > 1e-12) {
    throw std::logic_error("optimal_extension: row overlap not real positive");
  }
  const double t = std::sqrt(std::max(t2, 0.0));
  ext.a13 = Complex(0.0, 1.0) * t;
  ext.a23 = std::conj(ext.a13);

  Eigen::RowVector3cd r1, r2;
  r1 << a1(0), a1(1), ext.a13;
  r2 << a2(0), a2(1), ext.a23;
  ext.row_norm_1 = r1.norm();
  ext.row_norm_2 = r2.norm();
  r1 /= ext.row_norm_1;
  r2 /= ext.row_norm_2;
  // Conjugated cross product completes the orthonormal row triple.
  Eigen::RowVector3cd r3;
  r3 << std::conj(r1(1) * r2(2) - r1(2) * r2(1)), std::conj(r1(2) * r2(0) - r1(0) * r2(2)),
      std::conj(r1(0) * r2(1) - r1(1) * r2(0));
  ext.unitary3.resize(3, 3);
  ext.unitary3.row(0) = r1;
  ext.unitary3.row(1) = r2;
  ext.unitary3.row(2) = r3;
  return ext;
}

SvdReport svd_decomposition(double phi) {
  check_phi_range(phi);
  SvdReport report;
  const double s = std::sin(phi / 2.0);
  const double ymag = std::pow(2.0 - 2.0 * std::cos(phi), 0.25);
  const double g = (phi + kPi) / 4.0;
  report.sigma_plus = std::sqrt(1.0 + 2.0 * s + 2.0 * ymag * std::cos(g));
  report.sigma_minus = std::sqrt(std::max(1.0 + 2.0 * s - 2.0 * ymag * std::cos(g), 0.0));
  report.r_v = report.sigma_minus / report.sigma_plus;
  const double cot_g = std::cos(g) / std::sin(g);
  const double inv = 1.0 / (ymag * std::sin(g));  // +inf at phi = 0
  report.phi_plus = arccot(cot_g + inv);
  report.phi_minus = arccot(cot_g - inv);
  report.reflection_phase = report.phi_plus + report.phi_minus;
  report.u_lambda1 << -1.0, 1.0, -1.0, -1.0;
  report.u_lambda1 /= std::sqrt(2.0);
  Eigen::Matrix2cd exp_z = Eigen::Matrix2cd::Zero();
  exp_z(0, 0) = std::exp(Complex(0.0, report.phi_plus));
  exp_z(1, 1) = std::exp(Complex(0.0, -report.phi_plus));
  report.u_lambda2 = report.u_lambda1.inverse() * exp_z;
  return report;
}

NetworkDescription build_network(double phi) {
  check_phi_range(phi);
  NetworkDescription net;
  net.mode_count = 7;
  net.qubits = {{0, 1}, {2, 3}};
  net.ancillas = {4, 5, 6};
  if (phi < kPhaseEpsilon) {
    return net;  // exact identity
  }

  const SvdReport svd = svd_decomposition(phi);
  const double r = std::pow(success_probability(phi), 0.25);
  const double half = 1.0 / std::sqrt(2.0);
  // Core on the logical-1 modes (1, 3): balanced coupler, per-arm phases,
  // vacuum damping of the second singular direction, closing coupler. The
  // damped arm carries phi_minus - pi, the (0, pi) arccot branch folded into
  // the element phase.
  net.elements = {
      BeamSplitter{1, 3, half, kPi},
      PhaseShift{1, svd.phi_plus},
      PhaseShift{3, svd.phi_minus - kPi},
      BeamSplitter{3, 4, svd.r_v, 0.0},
      BeamSplitter{1, 3, half, 0.0},
      BeamSplitter{0, 5, r, 0.0},
      BeamSplitter{2, 6, r, 0.0},
  };
  return net;
}

std::vector<std::pair<double, double>> single_bs_solutions() {
  // 1 - 2 sin^2(theta) = sin^2(theta) has exactly the roots sin(theta)
  // = +-3^{-1/2}. The positive root realizes the sign flip; the mirrored
  // root is in the trivial class. Nothing in between is reachable.
  const double theta = std::asin(1.0 / std::sqrt(3.0));
  return {{theta, kPi}, {-theta, 0.0}};
}

double numeric_optimum(double phi, const OptimumOptions& opts) {
  check_phi_range(phi);
  if (phi < kPhaseEpsilon) {
    return 1.0;  // doing nothing succeeds with certainty
  }
  const Complex e = std::exp(Complex(0.0, phi)) - 1.0;

  // Success probability for core scale u = |y|^2 and extension magnitude t1,
  // with the partner magnitude forced by orthogonality.
  auto evaluate = [&](double u, double t1) {
    if (u <= 0.0 || t1 <= 0.0) {
      return 0.0;
    }
    const double y = std::sqrt(u);
    const double n1sq = 1.0 + std::norm(e) / u;
    const double n2sq = 1.0 + u;
    const double c = std::abs(Complex(y, 0.0) + e / y);  // |A1 A2^dag|, phase-independent
    const double t2 = c / t1;
    return 1.0 / ((n1sq + t1 * t1) * (n2sq + t2 * t2));
  };

  // The objective is unimodal in t1 for fixed u (one product factor grows,
  // the other shrinks), so golden-section handles the inner search.
  const double t_lo = 1e-9, t_hi = 2.5;
  const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
  auto best_over_ext = [&](double u) {
    double a = t_lo, b = t_hi;
    double x1 = b - golden * (b - a);
    double x2 = a + golden * (b - a);
    double f1 = evaluate(u, x1);
    double f2 = evaluate(u, x2);
    for (int k = 0; k < 2 * opts.grid_ext / 3 + 60; ++k) {
      if (f1 > f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - golden * (b - a);
        f1 = evaluate(u, x1);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + golden * (b - a);
        f2 = evaluate(u, x2);
      }
    }
    return std::max(f1, f2);
  };

  const double u_lo = 0.02, u_hi = 4.0;
  double best = 0.0, bu = u_lo;
  for (int i = 0; i < opts.grid_scale; ++i) {
    const double u = u_lo + (u_hi - u_lo) * i / (opts.grid_scale - 1);
    const double v = best_over_ext(u);
    if (v > best) {
      best = v;
      bu = u;
    }
  }
  double du = (u_hi - u_lo) / (opts.grid_scale - 1);
  for (int step = 0; step < opts.refine_steps; ++step) {
    bool improved = false;
    for (double u : {bu - du, bu + du}) {
      const double v = best_over_ext(u);
      if (v > best) {
        best = v;
        bu = u;
        improved = true;
      }
    }
    if (!improved) {
      du *= 0.5;
    }
  }
  return best;
}

}  // namespace gatelab
