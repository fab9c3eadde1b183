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

#include "gatelab/state_matrix.hpp"
#include "helpers.hpp"

using namespace gatelab;

namespace {

CreationPolynomial epr_polynomial() {
  return CreationPolynomial::parse("0.7071067811865476 * a1 a3 + 0.7071067811865476 * a2 a4");
}

ComplexMatrix random_symmetric(int n, std::mt19937_64& gen) {
  const ComplexMatrix m = testutil::random_complex(n, gen);
  return (m + m.transpose()) / 2.0;
}

}  // namespace

TEST_CASE("state matrix from polynomials") {
  const TwoPhotonStateMatrix pair = from_polynomial(CreationPolynomial::parse("a1 a2"));
  CHECK(std::abs(pair.m(0, 1) - Complex(0.5)) < 1e-15);
  CHECK(std::abs(pair.m(1, 0) - Complex(0.5)) < 1e-15);
  CHECK(photon_class_rank(pair) == 2);

  const TwoPhotonStateMatrix doubled = from_polynomial(CreationPolynomial::parse("a1^2"));
  CHECK(std::abs(doubled.m(0, 0) - Complex(1.0)) < 1e-15);
  CHECK(photon_class_rank(doubled) == 1);

  const TwoPhotonStateMatrix epr = from_polynomial(epr_polynomial());
  CHECK(photon_class_rank(epr) == 4);

  CHECK_THROWS_AS(from_polynomial(CreationPolynomial::parse("a1^3")), std::invalid_argument);
  CHECK_THROWS_AS(from_polynomial(CreationPolynomial::parse("a1^2 + a2")),
                  std::invalid_argument);
}

TEST_CASE("polynomial round trip through the matrix form") {
  auto gen = testutil::rng(79);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 2 + int(gen() % 4);
    CreationPolynomial p(m);
    for (int i = 0; i < m; ++i) {
      for (int j = i; j < m; ++j) {
        std::vector<int> expo(m, 0);
        ++expo[i];
        ++expo[j];
        p.add_term(expo, Complex(testutil::uniform(gen), testutil::uniform(gen)));
      }
    }
    const CreationPolynomial back = to_polynomial(from_polynomial(p));
    for (const auto& [expo, c] : p.terms()) {
      CHECK(std::abs(back.coefficient(expo) - c) < 1e-13);
    }
  }
}

TEST_CASE("transform preserves symmetry and rank") {
  auto gen = testutil::rng(83);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + int(gen() % 4);
    const TwoPhotonStateMatrix sm{random_symmetric(n, gen)};
    const ComplexMatrix u = testutil::random_unitary(n, gen);
    const TwoPhotonStateMatrix out = transform(sm, u);
    CHECK((out.m - out.m.transpose()).norm() < 1e-12);
    CHECK(photon_class_rank(out) == photon_class_rank(sm));
  }

  const TwoPhotonStateMatrix sm{random_symmetric(3, gen)};
  CHECK((transform(sm, ComplexMatrix::Identity(3, 3)).m - sm.m).norm() < 1e-14);
  CHECK_THROWS_AS(transform(sm, ComplexMatrix::Identity(4, 4)), std::invalid_argument);
  CHECK_THROWS_AS(transform(sm, 2.0 * ComplexMatrix::Identity(3, 3)), std::invalid_argument);
}

TEST_CASE("takagi factorization diagonalizes symmetric matrices") {
  auto gen = testutil::rng(89);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + int(gen() % 4);
    ComplexMatrix m = random_symmetric(n, gen);
    if (trial % 4 == 0) {
      m.row(0).setZero();
      m.col(0).setZero();  // rank-deficient case
    }
    const TakagiFactorization tak = takagi(m);
    CHECK(unitarity_error(tak.unitary) < 1e-9);
    const ComplexMatrix recon =
        tak.unitary * tak.values.cast<Complex>().asDiagonal() * tak.unitary.transpose();
    CHECK((recon - m).cwiseAbs().maxCoeff() < 1e-9);
    for (int k = 0; k + 1 < n; ++k) {
      CHECK(tak.values(k) >= tak.values(k + 1) - 1e-12);
    }

    // transform by U^dag reaches the diagonal class representative.
    const TwoPhotonStateMatrix diag = transform({m}, tak.unitary.adjoint());
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j) {
          CHECK(std::abs(diag.m(i, j)) < 1e-9);
        }
      }
    }
  }
}

TEST_CASE("zero padding keeps the rank") {
  const TwoPhotonStateMatrix epr = from_polynomial(epr_polynomial());
  ComplexMatrix padded = ComplexMatrix::Zero(6, 6);
  padded.topLeftCorner(4, 4) = epr.m;
  CHECK(photon_class_rank({padded}) == 4);
}

TEST_CASE("extra photon counting") {
  CHECK(min_additional_photons(2, 4) == 2);
  CHECK(min_additional_photons(4, 2) == 0);
  CHECK(min_additional_photons(3, 3) == 0);
  CHECK_THROWS_AS(min_additional_photons(-1, 2), std::invalid_argument);
}

TEST_CASE("matrix evolution matches the fock simulation") {
  auto gen = testutil::rng(97);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + int(gen() % 2);
    const TwoPhotonStateMatrix sm{random_symmetric(n, gen)};
    const ComplexMatrix u = testutil::random_unitary(n, gen);

    const FockState direct = apply_network(u, to_fock_state(sm));
    const FockState via_matrix = to_fock_state(transform(sm, u));
    for (const auto& [occ, amp] : via_matrix.terms()) {
      CHECK(std::abs(direct.amplitude(occ) - amp) < 1e-10);
    }
    CHECK(direct.squared_norm() == doctest::Approx(via_matrix.squared_norm()).epsilon(1e-10));
  }
}
