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

#include <stdexcept>

#include "gatelab/linalg.hpp"
#include "gatelab/polynomial.hpp"

namespace gatelab {

// Absolute-factorizability testing for creation polynomials. A multi-photon
// state is reachable from a product state by linear optics exactly when its
// polynomial splits over the complex numbers; for bivariate polynomials the
// question reduces to the rank of a structured linear system.

/// Linear system encoding the closedness condition
///   p (dg/dy - dh/dx) = g dp/dy - h dp/dx
/// over auxiliary polynomials with deg_x g <= mx-1, deg_y g <= my,
/// deg_x h <= mx, deg_y h <= my-2, where (mx, my) are the exact per-variable
/// degrees of p. For mx = my = m the matrix is 2m(2m-1) x (m+1)(2m-1). A
/// squarefree p is absolutely irreducible iff the kernel is trivial.
struct RuppertSystem {
  ComplexMatrix matrix;
  int rows = 0;
  int cols = 0;
  int degree = 0;    // max(degree_x, degree_y)
  int degree_x = 0;
  int degree_y = 0;
};

/// Requires a genuinely bivariate polynomial (positive degree in both of the
/// first two variables, no others).
RuppertSystem ruppert_matrix(const CreationPolynomial& p);

enum class FactorVerdict { kIrreducible, kFactorizable, kIndeterminate };

/// Raised when a rank decision falls inside the numerical guard band.
class IndeterminateRankError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rank-based factorizability over the complex numbers for a bivariate
/// polynomial. Degenerate inputs are decided by convention: constants and
/// single first-power variables are not factorizable; other monomials,
/// univariate polynomials of degree >= 2, and non-squarefree inputs are.
/// Singular-value ratios inside [tol, 100 tol) yield kIndeterminate.
FactorVerdict factor_verdict_bivariate(const CreationPolynomial& p, double tol = 1e-8);

/// Boolean wrapper; throws IndeterminateRankError on a guard-band decision.
bool is_factorizable_bivariate(const CreationPolynomial& p, double tol = 1e-8);

/// Numerical squarefreeness: evaluates resultants of p with dp/dx (and
/// dp/dy) at sample points of the other variable.
bool is_squarefree_bivariate(const CreationPolynomial& p, double tol = 1e-8);

/// Whether the state with polynomial p can be produced from a product state
/// by linear optics. Polynomials in more than two variables are reduced to
/// bivariate ones by seeded affine substitutions x_i -> a_i s + b_i t + c_i
/// with small integer coefficients, majority-voted over five trials.
/// Degree < 2 and single-variable inputs are trivially constructible.
bool is_product_constructible(const CreationPolynomial& p, unsigned long long seed = 42);

}  // namespace gatelab
