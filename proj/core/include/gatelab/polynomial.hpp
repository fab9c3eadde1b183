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
#include <string>
#include <vector>

#include "gatelab/linalg.hpp"

namespace gatelab {

/// Multivariate polynomial in creation operators: exponent vectors (one
/// non-negative integer per mode) mapped to complex coefficients. A pure
/// n-photon state is a homogeneous polynomial of degree n applied to the
/// vacuum.
class CreationPolynomial {
 public:
  explicit CreationPolynomial(int mode_count);

  /// Parses the text form, e.g. "0.5 * a1 a3 + (0-0.5j) * a2^2".
  /// Terms are separated by top-level + or -. Each term is an optional
  /// complex coefficient, an optional '*', and mode factors a<k> or a<k>^<e>.
  /// Coefficients: real (2, -0.5), imaginary (1.5j, -j, 2j), or parenthesized
  /// complex with no inner spaces ((1+2j), (0.5-0.25j)). The mode count is
  /// the largest index mentioned unless min_modes is larger. Throws
  /// std::invalid_argument on malformed input.
  static CreationPolynomial parse(const std::string& text, int min_modes = 0);

  void add_term(const std::vector<int>& exponents, Complex coefficient);

  int mode_count() const { return mode_count_; }
  const std::map<std::vector<int>, Complex>& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Max total exponent; -1 for the zero polynomial.
  int degree() const;
  /// Max exponent of one variable.
  int degree_in(int var) const;
  bool is_homogeneous() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Number of variables that actually appear.
  int support_size() const;

  Complex coefficient(const std::vector<int>& exponents) const;
  double max_abs_coefficient() const;

  CreationPolynomial operator+(const CreationPolynomial& other) const;
  CreationPolynomial operator*(const CreationPolynomial& other) const;
  CreationPolynomial derivative(int var) const;

  /// Substitutes variable v -> alpha[v]*s + beta[v]*t + gamma[v], producing a
  /// bivariate polynomial in (s, t).
  CreationPolynomial substitute_affine(const std::vector<Complex>& alpha,
                                       const std::vector<Complex>& beta,
                                       const std::vector<Complex>& gamma) const;

  /// Drops |coefficient| <= eps relative to the largest one.
  void prune(double eps = 1e-12);

  std::string to_string() const;

 private:
  int mode_count_;
  std::map<std::vector<int>, Complex> terms_;
};

}  // namespace gatelab
