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
#include "helpers.hpp"

using namespace gatelab;
using testutil::enumerate_occupations;
using testutil::random_unitary;
using testutil::substitution_amplitude;

TEST_CASE("permanent definition cases") {
  ComplexMatrix m(2, 2);
  m << 2.0, 3.0, 5.0, 7.0;
  CHECK(std::abs(permanent(m) - Complex(2.0 * 7.0 + 3.0 * 5.0)) < 1e-14);

  CHECK(std::abs(permanent(ComplexMatrix::Identity(3, 3)) - Complex(1.0)) < 1e-14);
  CHECK(permanent(ComplexMatrix(0, 0)) == Complex(1.0));
  CHECK_THROWS_AS(permanent(ComplexMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("permanent of the balanced mixer matrix") {
  // Mixing angle with sin^2 = 1/3; the reflection form keeps the two-photon
  // amplitude at 1 - 2 sin^2 = 1/3.
  const double theta = std::asin(1.0 / std::sqrt(3.0));
  ComplexMatrix b(2, 2);
  b << std::sin(theta), std::cos(theta), std::cos(theta), -std::sin(theta);
  CHECK(is_unitary(b, 1e-14));
  CHECK(std::abs(permanent(b) - Complex(1.0 / 3.0)) < 1e-14);
  CHECK(std::abs(permanent(b) - Complex(1.0 - 2.0 / 3.0)) < 1e-14);
}

TEST_CASE("permanent multilinearity in rows") {
  auto gen = testutil::rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    ComplexMatrix m = testutil::random_complex(4, gen);
    const Complex base = permanent(m);
    const Complex c(testutil::uniform(gen), testutil::uniform(gen));
    ComplexMatrix scaled = m;
    scaled.row(2) *= c;
    CHECK(std::abs(permanent(scaled) - c * base) < 1e-12);
  }
}

TEST_CASE("transition amplitudes: identity and mixers") {
  CHECK(std::abs(transition_amplitude(ComplexMatrix::Identity(2, 2), {1, 1}, {1, 1}) -
                 Complex(1.0)) < 1e-14);

  // Balanced splitter: two photons never exit in different arms.
  ComplexMatrix hom(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  hom << s, s, -s, s;
  CHECK(std::abs(transition_amplitude(hom, {1, 1}, {1, 1})) < 1e-14);

  // Reflection-form mixer at sin^2 = 1/3 keeps |1,1> with amplitude cos(2 theta).
  const double theta = std::asin(1.0 / std::sqrt(3.0));
  ComplexMatrix b(2, 2);
  b << std::sin(theta), std::cos(theta), std::cos(theta), -std::sin(theta);
  CHECK(std::abs(transition_amplitude(b, {1, 1}, {1, 1}) - Complex(std::cos(2.0 * theta))) <
        1e-14);

  CHECK(transition_amplitude(hom, {2, 0}, {1, 0}) == Complex(0.0));
  CHECK_THROWS_AS(transition_amplitude(hom, {1}, {1, 0}), std::invalid_argument);
}

TEST_CASE("transition amplitudes match explicit operator substitution") {
  auto gen = testutil::rng(23);
  for (int modes = 2; modes <= 5; ++modes) {
    const ComplexMatrix u = random_unitary(modes, gen);
    for (int photons = 0; photons <= 3; ++photons) {
      const auto basis = enumerate_occupations(modes, photons);
      for (const auto& in : basis) {
        for (const auto& out : basis) {
          const Complex via_permanent = transition_amplitude(u, in, out);
          const Complex via_substitution = substitution_amplitude(u, in, out);
          CHECK(std::abs(via_permanent - via_substitution) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("apply_network basics") {
  const FockState s = FockState::basis_state({1, 0, 1});
  const FockState same = apply_network(ComplexMatrix::Identity(3, 3), s);
  CHECK(std::abs(same.amplitude({1, 0, 1}) - Complex(1.0)) < 1e-14);
  CHECK(same.term_count() == 1);

  auto gen = testutil::rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix u = random_unitary(3, gen);
    FockState in(3);
    for (const auto& occ : enumerate_occupations(3, 2)) {
      in.add(occ, Complex(testutil::uniform(gen), testutil::uniform(gen)));
    }
    const FockState out = apply_network(u, in);
    CHECK(out.squared_norm() == doctest::Approx(in.squared_norm()).epsilon(1e-12));
    CHECK(out.total_photons() == 2);
  }
}

TEST_CASE("photon number conservation for unitary networks") {
  auto gen = testutil::rng(37);
  const ComplexMatrix u = random_unitary(4, gen);
  const FockState out = apply_network(u, FockState::basis_state({2, 1, 0, 0}));
  for (const auto& [occ, amp] : out.terms()) {
    int total = 0;
    for (int c : occ) total += c;
    CHECK(total == 3);
  }
}

TEST_CASE("four photons on twelve modes stay within tolerance") {
  auto gen = testutil::rng(39);
  const ComplexMatrix u = random_unitary(12, gen);
  OccupationVector occ(12, 0);
  occ[0] = 2;
  occ[5] = 1;
  occ[11] = 1;
  const FockState out = apply_network(u, FockState::basis_state(occ));
  CHECK(out.squared_norm() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(out.total_photons() == 4);
}

TEST_CASE("fock state bookkeeping") {
  FockState s(2);
  s.add({1, 0}, 0.5);
  s.add({1, 0}, 0.25);
  CHECK(std::abs(s.amplitude({1, 0}) - Complex(0.75)) < 1e-15);
  CHECK_THROWS_AS(s.add({0, 0}, 1.0), std::invalid_argument);  // photon count mix
  CHECK_THROWS_AS(s.add({1, 0, 0}, 1.0), std::invalid_argument);
  s.add({1, 0}, -0.75);  // cancels to zero, term dropped
  CHECK(s.empty());
}

TEST_CASE("post selection splits norm") {
  FockState s(3);
  s.add({1, 1, 0}, std::sqrt(0.5));
  s.add({1, 0, 1}, std::sqrt(0.3));
  s.add({0, 1, 1}, std::sqrt(0.2));

  auto [vac2, p] = post_select(s, {2}, {0});
  CHECK(p == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(vac2.mode_count() == 2);
  CHECK(std::abs(vac2.amplitude({1, 1}) - Complex(std::sqrt(0.5))) < 1e-12);

  // Complement outcomes account for the rest of the norm.
  auto [one2, q] = post_select(s, {2}, {1});
  CHECK(p + q == doctest::Approx(s.squared_norm()).epsilon(1e-12));

  auto [none, zero] = post_select(s, {0}, {2});
  CHECK(zero == 0.0);
  CHECK(none.empty());

  CHECK_THROWS_AS(post_select(s, {0, 0}, {0, 0}), std::invalid_argument);  // duplicate
  CHECK_THROWS_AS(post_select(s, {7}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(post_select(s, {0, 1, 2}, {0, 0, 0}), std::invalid_argument);
}

TEST_CASE("apply_network rejects mismatched dimensions") {
  CHECK_THROWS_AS(apply_network(ComplexMatrix::Identity(3, 3), FockState::basis_state({1, 0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply_network(ComplexMatrix(2, 3), FockState::basis_state({1, 0})),
                  std::invalid_argument);
}

TEST_CASE("induced operator of the identity network") {
  DualRailLayout layout{{{0, 1}, {2, 3}}, {}};
  const ComplexMatrix op = induced_logical_operator(ComplexMatrix::Identity(4, 4), layout);
  CHECK((op - ComplexMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-14);

  DualRailLayout bad{{{0, 1}, {1, 2}}, {3}};
  CHECK_THROWS_AS(induced_logical_operator(ComplexMatrix::Identity(4, 4), bad),
                  std::invalid_argument);
}
