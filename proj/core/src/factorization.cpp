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

#include "gatelab/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <Eigen/LU>
#include <Eigen/SVD>

namespace gatelab {

namespace {

// Dense coefficient grid c(i, j) of x^i y^j for a polynomial supported on the
// first two variables.
Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic> bivariate_grid(const CreationPolynomial& p,
                                                                      int mx, int my) {
  Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic> grid =
      Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>::Zero(mx + 1, my + 1);
  for (const auto& [expo, c] : p.terms()) {
    grid(expo[0], p.mode_count() > 1 ? expo[1] : 0) += c;
  }
  return grid;
}

void require_bivariate_support(const CreationPolynomial& p) {
  for (int v = 2; v < p.mode_count(); ++v) {
    if (p.degree_in(v) > 0) {
      throw std::invalid_argument("ruppert: polynomial must be bivariate");
    }
  }
}

// Resultant of two univariate polynomials via the Sylvester determinant.
Complex resultant(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  const int da = static_cast<int>(a.size()) - 1;
  const int db = static_cast<int>(b.size()) - 1;
  if (da < 1 || db < 0) {
    return Complex(1.0, 0.0);
  }
  const int n = da + db;
  ComplexMatrix syl = ComplexMatrix::Zero(n, n);
  for (int r = 0; r < db; ++r) {
    for (int k = 0; k <= da; ++k) {
      syl(r, r + k) = a[da - k];
    }
  }
  for (int r = 0; r < da; ++r) {
    for (int k = 0; k <= db; ++k) {
      syl(db + r, r + k) = b[db - k];
    }
  }
  return syl.determinant();
}

// p(x, y0) as a univariate coefficient list in x, highest degree last trimmed.
std::vector<Complex> evaluate_in_y(
    const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>& grid, Complex y0) {
  std::vector<Complex> coeffs(grid.rows(), Complex(0.0, 0.0));
  for (int i = 0; i < grid.rows(); ++i) {
    Complex ypow(1.0, 0.0);
    for (int j = 0; j < grid.cols(); ++j) {
      coeffs[i] += grid(i, j) * ypow;
      ypow *= y0;
    }
  }
  while (coeffs.size() > 1 && std::abs(coeffs.back()) < 1e-13) {
    coeffs.pop_back();
  }
  return coeffs;
}

std::vector<Complex> formal_derivative(const std::vector<Complex>& a) {
  std::vector<Complex> d;
  for (std::size_t k = 1; k < a.size(); ++k) {
    d.push_back(a[k] * double(k));
  }
  if (d.empty()) {
    d.push_back(Complex(0.0, 0.0));
  }
  return d;
}

bool gcd_with_derivative_trivial(
    const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>& grid, double tol) {
  // Sample the other variable at generic points; a repeated factor makes the
  // resultant of p with dp/dx vanish identically.
  const Complex samples[3] = {{1.2345, 0.6789}, {-0.9876, 1.1111}, {0.4321, -1.2222}};
  for (const Complex& y0 : samples) {
    const std::vector<Complex> slice = evaluate_in_y(grid, y0);
    if (slice.size() < 2) {
      continue;  // degree collapsed at this sample
    }
    if (std::abs(resultant(slice, formal_derivative(slice))) > tol) {
      return true;
    }
  }
  return false;
}

CreationPolynomial normalized_copy(const CreationPolynomial& p) {
  const double scale = p.max_abs_coefficient();
  if (scale == 0.0) {
    return p;
  }
  CreationPolynomial out(p.mode_count());
  for (const auto& [expo, c] : p.terms()) {
    out.add_term(expo, c / scale);
  }
  return out;
}

// Restricts a polynomial to the variables that actually appear.
CreationPolynomial compress_support(const CreationPolynomial& p) {
  std::vector<int> keep;
  for (int v = 0; v < p.mode_count(); ++v) {
    if (p.degree_in(v) > 0) {
      keep.push_back(v);
    }
  }
  const int modes = std::max<int>(2, keep.size());
  CreationPolynomial out(modes);
  for (const auto& [expo, c] : p.terms()) {
    std::vector<int> packed(modes, 0);
    for (std::size_t k = 0; k < keep.size(); ++k) {
      packed[k] = expo[keep[k]];
    }
    out.add_term(packed, c);
  }
  return out;
}

}  // namespace

RuppertSystem ruppert_matrix(const CreationPolynomial& p) {
  require_bivariate_support(p);
  const int mx = p.degree_in(0);
  const int my = p.mode_count() > 1 ? p.degree_in(1) : 0;
  if (mx < 1 || my < 1) {
    throw std::invalid_argument("ruppert: positive degree in both variables required");
  }
  const auto grid = bivariate_grid(p, mx, my);

  const int g_count = mx * (my + 1);        // deg_x g <= mx-1, deg_y g <= my
  const int h_count = (mx + 1) * (my - 1);  // deg_x h <= mx,   deg_y h <= my-2
  const int cols = g_count + h_count;

  // Accumulate with y-degree up to 2my-1; the top band cancels per column
  // (the leading y terms of p dg/dy and g dp/dy coincide) and is trimmed.
  const int wide = 2 * my;
  ComplexMatrix full = ComplexMatrix::Zero(2 * mx * wide, cols);
  auto row = [wide](int ra, int rb) { return ra * wide + rb; };

  int col = 0;
  for (int a = 0; a <= mx - 1; ++a) {
    for (int b = 0; b <= my; ++b, ++col) {
      for (int i = 0; i <= mx; ++i) {
        for (int j = 0; j <= my; ++j) {
          const Complex c = grid(i, j);
          if (c == Complex(0.0, 0.0)) {
            continue;
          }
          if (b >= 1) {
            full(row(a + i, b - 1 + j), col) += double(b) * c;  // p dg/dy
          }
          if (j >= 1) {
            full(row(a + i, b + j - 1), col) -= double(j) * c;  // -g dp/dy
          }
        }
      }
    }
  }
  for (int a = 0; a <= mx; ++a) {
    for (int b = 0; b <= my - 2; ++b, ++col) {
      for (int i = 0; i <= mx; ++i) {
        for (int j = 0; j <= my; ++j) {
          const Complex c = grid(i, j);
          if (c == Complex(0.0, 0.0)) {
            continue;
          }
          if (a >= 1) {
            full(row(a - 1 + i, b + j), col) -= double(a) * c;  // -p dh/dx
          }
          if (i >= 1) {
            full(row(a + i - 1, b + j), col) += double(i) * c;  // h dp/dx
          }
        }
      }
    }
  }

  RuppertSystem sys;
  sys.rows = 2 * mx * (2 * my - 1);
  sys.cols = cols;
  sys.degree = std::max(mx, my);
  sys.degree_x = mx;
  sys.degree_y = my;
  sys.matrix.resize(sys.rows, sys.cols);
  int out_row = 0;
  for (int ra = 0; ra < 2 * mx; ++ra) {
    for (int rb = 0; rb < 2 * my - 1; ++rb, ++out_row) {
      sys.matrix.row(out_row) = full.row(row(ra, rb));
    }
  }
  return sys;
}

bool is_squarefree_bivariate(const CreationPolynomial& p, double tol) {
  require_bivariate_support(p);
  const CreationPolynomial q = normalized_copy(p);
  const int mx = q.degree_in(0);
  const int my = q.mode_count() > 1 ? q.degree_in(1) : 0;
  const auto grid = bivariate_grid(q, std::max(mx, 0), std::max(my, 0));
  if (mx >= 1 && !gcd_with_derivative_trivial(grid, tol)) {
    return false;
  }
  if (my >= 1 && !gcd_with_derivative_trivial(grid.transpose().eval(), tol)) {
    return false;
  }
  return true;
}

FactorVerdict factor_verdict_bivariate(const CreationPolynomial& p, double tol) {
  require_bivariate_support(p);
  CreationPolynomial q = normalized_copy(p);
  q.prune(1e-12);
  const int deg = q.degree();
  if (deg <= 0) {
    return FactorVerdict::kIrreducible;  // constants and zero do not factor
  }
  if (q.is_monomial()) {
    return deg >= 2 ? FactorVerdict::kFactorizable : FactorVerdict::kIrreducible;
  }
  const int mx = q.degree_in(0);
  const int my = q.mode_count() > 1 ? q.degree_in(1) : 0;
  if (mx == 0 || my == 0) {
    // Univariate: splits into linear factors over the complex numbers.
    return deg >= 2 ? FactorVerdict::kFactorizable : FactorVerdict::kIrreducible;
  }
  if (!is_squarefree_bivariate(q, 1e-9)) {
    return FactorVerdict::kFactorizable;  // a repeated factor is a factorization
  }

  const RuppertSystem sys = ruppert_matrix(q);
  Eigen::JacobiSVD<ComplexMatrix> svd(sys.matrix);
  const auto& s = svd.singularValues();
  const double smax = s(0);
  if (smax <= 0.0) {
    return FactorVerdict::kIndeterminate;
  }
  const double min_ratio = s(s.size() - 1) / smax;
  if (min_ratio < tol) {
    return FactorVerdict::kFactorizable;
  }
  if (min_ratio < 100.0 * tol) {
    return FactorVerdict::kIndeterminate;
  }
  return FactorVerdict::kIrreducible;
}

bool is_factorizable_bivariate(const CreationPolynomial& p, double tol) {
  switch (factor_verdict_bivariate(p, tol)) {
    case FactorVerdict::kFactorizable:
      return true;
    case FactorVerdict::kIrreducible:
      return false;
    default:
      throw IndeterminateRankError("rank decision inside guard band");
  }
}

bool is_product_constructible(const CreationPolynomial& p, unsigned long long seed) {
  CreationPolynomial q = compress_support(p);
  q.prune(1e-12);
  const int deg = q.degree();
  if (deg < 2) {
    return true;  // single photons and vacuum are products
  }
  if (q.support_size() <= 1) {
    return true;  // a power of one creation operator
  }
  if (q.support_size() <= 2) {
    return is_factorizable_bivariate(q);
  }

  // Seeded affine restriction to two variables, majority-voted. Substituting
  // x_i -> a_i s + b_i t + c_i preserves products always and, generically,
  // irreducibility; degenerate draws (degree collapse) are redrawn.
  const int n = q.mode_count();
  int votes_true = 0;
  int votes_total = 0;
  for (int trial = 0; trial < 5; ++trial) {
    std::mt19937_64 gen(seed + 0x9e3779b97f4a7c15ULL * (trial + 1));
    auto small_int = [&gen] { return double(int(gen() % 19) - 9); };
    for (int attempt = 0; attempt < 64; ++attempt) {
      std::vector<Complex> alpha(n), beta(n), gamma(n);
      for (int v = 0; v < n; ++v) {
        alpha[v] = small_int();
        beta[v] = small_int();
        gamma[v] = small_int();
      }
      CreationPolynomial reduced = q.substitute_affine(alpha, beta, gamma);
      reduced.prune(1e-12);
      if (reduced.degree() != deg || reduced.degree_in(0) != deg || reduced.degree_in(1) != deg) {
        continue;  // degree collapsed, redraw
      }
      const FactorVerdict verdict = factor_verdict_bivariate(reduced);
      if (verdict == FactorVerdict::kIndeterminate) {
        continue;
      }
      ++votes_total;
      if (verdict == FactorVerdict::kFactorizable) {
        ++votes_true;
      }
      break;
    }
  }
  if (votes_total == 0) {
    throw IndeterminateRankError("all restriction trials were degenerate");
  }
  return 2 * votes_true > votes_total;
}

}  // namespace gatelab
