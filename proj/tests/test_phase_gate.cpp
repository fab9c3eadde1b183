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

#include <doctest.h>

#include <cmath>

#include "gatelab/fock.hpp"
#include "gatelab/permanent.hpp"
#include "gatelab/phase_gate.hpp"
#include "helpers.hpp"

using namespace gatelab;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("success probability closed form") {
  CHECK(success_probability(0.0) == 1.0);
  CHECK(success_probability(kPi) == doctest::Approx(1.0 / 9.0).epsilon(1e-13));
  CHECK(success_probability(kPi / 3.0) == doctest::Approx(1.0 / 9.0).epsilon(1e-13));
  CHECK(success_probability(kPi / 2.0) ==
        doctest::Approx(0.09048471182484562).epsilon(1e-12));
  CHECK(success_probability(2.05) == doctest::Approx(0.085786821934484).epsilon(1e-11));
  CHECK_THROWS_AS(success_probability(-0.1), std::domain_error);
  CHECK_THROWS_AS(success_probability(3.2), std::domain_error);
}

TEST_CASE("success probability dips below 1/9 after pi/3") {
  for (double phi : {1.2, 1.5, 2.0, 2.5, 3.0}) {
    CHECK(success_probability(phi) < 1.0 / 9.0);
  }
  // Far side of the interval stays at or above 1/9.
  CHECK(success_probability(0.5) > 1.0 / 9.0);
}

TEST_CASE("core matrix satisfies the permanent phase relation") {
  auto gen = testutil::rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const double phi = testutil::uniform(gen, 0.0, kPi);
    const Complex x(testutil::uniform(gen), testutil::uniform(gen));
    const Complex y(testutil::uniform(gen), testutil::uniform(gen));
    if (std::abs(x) < 0.1 || std::abs(y) < 0.1) {
      continue;
    }
    const CoreSolution core = core_matrix(phi, x, y, 0.5);
    const Complex ratio = permanent(core.matrix) / (core.matrix(0, 0) * core.matrix(1, 1));
    CHECK(std::abs(ratio - std::exp(Complex(0.0, phi))) < 1e-12);
  }

  const CoreSolution zero_phase = core_matrix(0.0, Complex(2.0), Complex(3.0));
  CHECK(std::abs(zero_phase.matrix(0, 1)) == 0.0);

  const CoreSolution flip =
      core_matrix(kPi, 1.0, -std::sqrt(std::exp(Complex(0.0, kPi)) - 1.0));
  const Complex ratio = permanent(flip.matrix) / (flip.matrix(0, 0) * flip.matrix(1, 1));
  CHECK(std::abs(ratio - Complex(-1.0)) < 1e-12);

  CHECK_THROWS_AS(core_matrix(1.0, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("optimal extension is unitary and optimal") {
  for (double phi : {0.05, 0.4, kPi / 2.0, 1.9, 2.8, kPi}) {
    const OptimalExtension ext = optimal_extension(phi);
    CHECK(unitarity_error(ext.unitary3) < 1e-10);
    CHECK(ext.a13 == std::conj(ext.a23));
    CHECK(ext.implied_success_probability() ==
          doctest::Approx(success_probability(phi)).epsilon(1e-12));
  }

  // At the sign flip the third column empties out; the ancilla is unused.
  CHECK(std::abs(optimal_extension(kPi).a13) < 1e-12);

  // The pair magnitude equals the closed form's cross term square root.
  const OptimalExtension half = optimal_extension(kPi / 2.0);
  CHECK(std::abs(half.a13) == doctest::Approx(0.954033396231209).epsilon(1e-12));
  const double cross =
      std::pow(2.0, 1.5) * std::sin((kPi - kPi / 2.0) / 4.0) * std::sqrt(std::sin(kPi / 4.0));
  CHECK(std::abs(half.a13) * std::abs(half.a13) == doctest::Approx(cross).epsilon(1e-12));

  const OptimalExtension idle = optimal_extension(0.0);
  CHECK((idle.unitary3 - ComplexMatrix::Identity(3, 3)).norm() == 0.0);
  CHECK(idle.implied_success_probability() == 1.0);
}

TEST_CASE("svd report closed forms") {
  const SvdReport flip = svd_decomposition(kPi);
  CHECK(flip.sigma_plus == doctest::Approx(std::sqrt(3.0)).epsilon(1e-13));
  CHECK(flip.sigma_minus == doctest::Approx(std::sqrt(3.0)).epsilon(1e-13));
  CHECK(flip.r_v == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(1.0 / std::pow(flip.sigma_plus, 4.0) == doctest::Approx(1.0 / 9.0).epsilon(1e-13));
  CHECK(flip.reflection_phase == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(flip.phi_plus == doctest::Approx(std::atan2(1.0, 1.0 / std::sqrt(2.0))).epsilon(1e-12));
  CHECK(flip.phi_minus == doctest::Approx(std::atan2(1.0, -1.0 / std::sqrt(2.0))).epsilon(1e-12));

  const SvdReport idle = svd_decomposition(0.0);
  CHECK(idle.sigma_plus == doctest::Approx(1.0));
  CHECK(idle.sigma_minus == doctest::Approx(1.0));
  CHECK(idle.r_v == doctest::Approx(1.0));

  const SvdReport quarter = svd_decomposition(kPi / 2.0);
  CHECK(quarter.sigma_plus == doctest::Approx(1.823291881049).epsilon(1e-11));
  CHECK(quarter.sigma_minus == doctest::Approx(1.226390574511).epsilon(1e-11));
}

TEST_CASE("sigma plus matches the optimal success probability everywhere") {
  for (int k = 0; k <= 50; ++k) {
    const double phi = kPi * k / 50.0;
    const SvdReport report = svd_decomposition(phi);
    CHECK(std::abs(1.0 / std::pow(report.sigma_plus, 4.0) - success_probability(phi)) < 1e-10);
  }
}

TEST_CASE("svd report singular values match the numeric decomposition") {
  auto gen = testutil::rng(67);
  for (int trial = 0; trial < 25; ++trial) {
    const double phi = testutil::uniform(gen, 0.05, kPi);
    const CoreSolution core =
        core_matrix(phi, 1.0, -std::sqrt(std::exp(Complex(0.0, phi)) - 1.0));
    Eigen::JacobiSVD<ComplexMatrix> svd(core.matrix);
    const SvdReport report = svd_decomposition(phi);
    CHECK(svd.singularValues()(0) == doctest::Approx(report.sigma_plus).epsilon(1e-11));
    CHECK(svd.singularValues()(1) == doctest::Approx(report.sigma_minus).epsilon(1e-11));
  }
}

TEST_CASE("svd elements reconstruct the rescaled core") {
  for (double phi : {0.3, 1.1, kPi / 2.0, 2.4, kPi - 0.01, kPi}) {
    const SvdReport rep = svd_decomposition(phi);
    const Complex w = std::sqrt(std::exp(Complex(0.0, phi)) - 1.0);
    Eigen::Matrix2cd core;
    core << 1.0, -w, -w, 1.0;
    Eigen::Matrix2cd center = Eigen::Matrix2cd::Zero();
    center(0, 0) = 1.0;
    center(1, 1) = rep.r_v * std::exp(Complex(0.0, rep.reflection_phase - kPi));
    const Eigen::Matrix2cd recon = rep.u_lambda2 * center * rep.u_lambda1;
    CHECK((recon - core / rep.sigma_plus).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("built network realizes the phase gate") {
  for (double phi : {0.0, 0.7, kPi / 2.0, 2.05, kPi}) {
    const NetworkDescription net = build_network(phi);
    CHECK(net.mode_count == 7);
    const VerificationReport report = verify_network(net, phi, 1e-9);
    CHECK(report.passed);
    CHECK(report.success_probability ==
          doctest::Approx(success_probability(phi)).epsilon(1e-10));
  }
  CHECK(build_network(0.0).elements.empty());
  CHECK(build_network(2.05).elements.size() == 7);  // five couplers, two shifts
}

TEST_CASE("sign-flip network amplitudes") {
  const ComplexMatrix u = compose_elements(build_network(kPi));
  const FockState out = apply_network(u, FockState::basis_state({0, 1, 0, 1, 0, 0, 0}));
  CHECK(std::abs(out.amplitude({0, 1, 0, 1, 0, 0, 0}) - Complex(-1.0 / 3.0)) < 1e-12);

  // Post-selecting the three ancillas on vacuum and projecting onto the
  // computational pattern reproduces the uniform 1/9.
  auto [kept, p_vacuum] = post_select(out, {4, 5, 6}, {0, 0, 0});
  CHECK(p_vacuum >= 1.0 / 9.0);  // vacuum outcome includes leaked terms
  CHECK(std::norm(kept.amplitude({0, 1, 0, 1})) == doctest::Approx(1.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("verification catches a perturbed bystander") {
  NetworkDescription net = build_network(1.3);
  for (Element& e : net.elements) {
    if (auto* bs = std::get_if<BeamSplitter>(&e)) {
      if (bs->mode_a == 0 && bs->mode_b == 5) {
        bs->transmittivity += 1e-3;
      }
    }
  }
  const VerificationReport report = verify_network(net, 1.3, 1e-9);
  CHECK_FALSE(report.passed);
  CHECK(report.uniformity_deviation > 1e-5);
}

TEST_CASE("single beam splitter solutions") {
  const auto solutions = single_bs_solutions();
  REQUIRE(solutions.size() == 2);
  CHECK(solutions[0].first == doctest::Approx(std::asin(1.0 / std::sqrt(3.0))).epsilon(1e-15));
  CHECK(solutions[0].second == kPi);
  CHECK(solutions[1].first == doctest::Approx(-std::asin(1.0 / std::sqrt(3.0))).epsilon(1e-15));
  CHECK(solutions[1].second == 0.0);
  for (const auto& [theta, phi] : solutions) {
    const double s2 = std::sin(theta) * std::sin(theta);
    CHECK(std::abs(1.0 - 3.0 * s2) <= 1e-14);  // constraint residual
    CHECK((phi == 0.0 || phi == kPi));
    CHECK_FALSE((phi > 0.0 && phi < kPi));
  }
}

TEST_CASE("numeric optimum agrees with the closed form") {
  for (int k = 1; k <= 12; ++k) {
    const double phi = kPi * k / 13.0;
    CHECK(std::abs(numeric_optimum(phi) - success_probability(phi)) <= 1e-6);
  }
  CHECK(numeric_optimum(kPi) == doctest::Approx(1.0 / 9.0).epsilon(1e-6));
  CHECK(numeric_optimum(kPi / 2.0) == doctest::Approx(0.09048471182484562).epsilon(1e-6));
  CHECK(std::abs(numeric_optimum(kPi / 3.0) - 1.0 / 9.0) <= 1e-5);
  CHECK(numeric_optimum(0.0) == 1.0);
}

TEST_CASE("argmin of the success probability sits near 2.05") {
  double best_phi = 0.0, best = 2.0;
  for (int k = 0; k <= 3141; ++k) {
    const double phi = kPi * k / 3141.0;
    const double v = success_probability(phi);
    if (v < best) {
      best = v;
      best_phi = phi;
    }
  }
  CHECK(best_phi > 2.00);
  CHECK(best_phi < 2.10);
  CHECK(best < 1.0 / 9.0);
}
