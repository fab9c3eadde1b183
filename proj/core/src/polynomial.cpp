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

#include "gatelab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gatelab {

CreationPolynomial::CreationPolynomial(int mode_count) : mode_count_(mode_count) {
  if (mode_count < 1) {
    throw std::invalid_argument("polynomial: mode count must be positive");
  }
}

void CreationPolynomial::add_term(const std::vector<int>& exponents, Complex coefficient) {
  if (static_cast<int>(exponents.size()) != mode_count_) {
    throw std::invalid_argument("polynomial: exponent length mismatch");
  }
  for (int e : exponents) {
    if (e < 0) {
      throw std::invalid_argument("polynomial: negative exponent");
    }
  }
  if (coefficient == Complex(0.0, 0.0)) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == Complex(0.0, 0.0)) {
      terms_.erase(it);
    }
  }
}

int CreationPolynomial::degree() const {
  int deg = -1;
  for (const auto& [expo, c] : terms_) {
    deg = std::max(deg, std::accumulate(expo.begin(), expo.end(), 0));
  }
  return deg;
}

int CreationPolynomial::degree_in(int var) const {
  int deg = 0;
  for (const auto& [expo, c] : terms_) {
    deg = std::max(deg, expo[var]);
  }
  return deg;
}

bool CreationPolynomial::is_homogeneous() const {
  if (terms_.empty()) {
    return true;
  }
  const int deg = std::accumulate(terms_.begin()->first.begin(), terms_.begin()->first.end(), 0);
  for (const auto& [expo, c] : terms_) {
    if (std::accumulate(expo.begin(), expo.end(), 0) != deg) {
      return false;
    }
  }
  return true;
}

int CreationPolynomial::support_size() const {
  int count = 0;
  for (int v = 0; v < mode_count_; ++v) {
    if (degree_in(v) > 0) {
      ++count;
    }
  }
  return count;
}

Complex CreationPolynomial::coefficient(const std::vector<int>& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Complex(0.0, 0.0) : it->second;
}

double CreationPolynomial::max_abs_coefficient() const {
  double best = 0.0;
  for (const auto& [expo, c] : terms_) {
    best = std::max(best, std::abs(c));
  }
  return best;
}

CreationPolynomial CreationPolynomial::operator+(const CreationPolynomial& other) const {
  if (other.mode_count_ != mode_count_) {
    throw std::invalid_argument("polynomial: mode count mismatch");
  }
  CreationPolynomial out = *this;
  for (const auto& [expo, c] : other.terms_) {
    out.add_term(expo, c);
  }
  return out;
}

CreationPolynomial CreationPolynomial::operator*(const CreationPolynomial& other) const {
  if (other.mode_count_ != mode_count_) {
    throw std::invalid_argument("polynomial: mode count mismatch");
  }
  CreationPolynomial out(mode_count_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      std::vector<int> expo(mode_count_);
      for (int v = 0; v < mode_count_; ++v) {
        expo[v] = ea[v] + eb[v];
      }
      out.add_term(expo, ca * cb);
    }
  }
  return out;
}

CreationPolynomial CreationPolynomial::derivative(int var) const {
  CreationPolynomial out(mode_count_);
  for (const auto& [expo, c] : terms_) {
    if (expo[var] == 0) {
      continue;
    }
    std::vector<int> lowered = expo;
    --lowered[var];
    out.add_term(lowered, c * double(expo[var]));
  }
  return out;
}

CreationPolynomial CreationPolynomial::substitute_affine(const std::vector<Complex>& alpha,
                                                         const std::vector<Complex>& beta,
                                                         const std::vector<Complex>& gamma) const {
  if (static_cast<int>(alpha.size()) != mode_count_ || beta.size() != alpha.size() ||
      gamma.size() != alpha.size()) {
    throw std::invalid_argument("substitute_affine: coefficient length mismatch");
  }
  CreationPolynomial out(2);
  for (const auto& [expo, c] : terms_) {
    CreationPolynomial term(2);
    term.add_term({0, 0}, c);
    for (int v = 0; v < mode_count_; ++v) {
      if (expo[v] == 0) {
        continue;
      }
      CreationPolynomial linear(2);
      linear.add_term({1, 0}, alpha[v]);
      linear.add_term({0, 1}, beta[v]);
      linear.add_term({0, 0}, gamma[v]);
      for (int k = 0; k < expo[v]; ++k) {
        term = term * linear;
      }
    }
    out = out + term;
  }
  return out;
}

void CreationPolynomial::prune(double eps) {
  const double cut = eps * max_abs_coefficient();
  for (auto it = terms_.begin(); it != terms_.end();) {
    it = std::abs(it->second) <= cut ? terms_.erase(it) : std::next(it);
  }
}

std::string CreationPolynomial::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [expo, c] : terms_) {
    if (!first) {
      os << " + ";
    }
    first = false;
    os << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "j)";
    for (int v = 0; v < mode_count_; ++v) {
      if (expo[v] > 0) {
        os << " a" << (v + 1);
        if (expo[v] > 1) {
          os << "^" << expo[v];
        }
      }
    }
  }
  return os.str();
}

namespace {

struct Scanner {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }
  bool done() const { return pos >= text.size(); }
  char peek() const { return pos < text.size() ? text[pos] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos) +
                                ": " + what);
  }

  // Unsigned decimal with optional fraction and exponent.
  double read_real() {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (peek() == '.') {
      ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    if (pos == start || (pos == start + 1 && text[start] == '.')) {
      fail("expected a number");
    }
    if (peek() == 'e' || peek() == 'E') {
      std::size_t mark = pos + 1;
      if (mark < text.size() && (text[mark] == '+' || text[mark] == '-')) ++mark;
      if (mark < text.size() && std::isdigit(static_cast<unsigned char>(text[mark]))) {
        pos = mark;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      }
    }
    double value = 0.0;
    const auto res = std::from_chars(text.data() + start, text.data() + pos, value);
    if (res.ec != std::errc()) {
      fail("bad number");
    }
    return value;
  }

  int read_int() {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) {
      fail("expected an integer");
    }
    int value = 0;
    std::from_chars(text.data() + start, text.data() + pos, value);
    return value;
  }

  // One signed piece of a complex literal: 1.5, 2j, j.
  Complex read_signed_piece() {
    double sign = 1.0;
    if (peek() == '+' || peek() == '-') {
      sign = text[pos] == '-' ? -1.0 : 1.0;
      ++pos;
    }
    if (peek() == 'j') {
      ++pos;
      return Complex(0.0, sign);
    }
    const double value = read_real();
    if (peek() == 'j') {
      ++pos;
      return Complex(0.0, sign * value);
    }
    return Complex(sign * value, 0.0);
  }

  // re, imj, re+imj, re-imj; no spaces inside.
  Complex read_complex_literal() {
    Complex value = read_signed_piece();
    if (peek() == '+' || peek() == '-') {
      const Complex second = read_signed_piece();
      if (second.imag() == 0.0) {
        fail("second part of a complex literal must be imaginary (end with j)");
      }
      value += second;
    }
    return value;
  }
};

struct RawTerm {
  Complex coefficient;
  std::map<int, int> exponents;  // 0-based variable -> exponent
};

}  // namespace

CreationPolynomial CreationPolynomial::parse(const std::string& text, int min_modes) {
  Scanner sc{text};
  std::vector<RawTerm> raw;
  int max_index = 0;

  sc.skip_ws();
  if (sc.done()) {
    throw std::invalid_argument("polynomial parse error: empty input");
  }
  double pending_sign = 1.0;
  if (sc.peek() == '+' || sc.peek() == '-') {
    pending_sign = sc.peek() == '-' ? -1.0 : 1.0;
    ++sc.pos;
  }
  while (true) {
    sc.skip_ws();
    RawTerm term;
    term.coefficient = pending_sign;
    bool have_coeff = false;

    if (sc.peek() == '(') {
      ++sc.pos;
      // strip inner spaces, then parse the literal
      std::string inner;
      while (!sc.done() && sc.peek() != ')') {
        if (!std::isspace(static_cast<unsigned char>(sc.peek()))) {
          inner.push_back(sc.peek());
        }
        ++sc.pos;
      }
      if (sc.done()) {
        sc.fail("unterminated parenthesis");
      }
      ++sc.pos;  // ')'
      Scanner in{inner};
      term.coefficient *= in.read_complex_literal();
      if (!in.done()) {
        sc.fail("trailing characters inside complex literal");
      }
      have_coeff = true;
    } else if (std::isdigit(static_cast<unsigned char>(sc.peek())) || sc.peek() == '.' ||
               sc.peek() == 'j') {
      // An unparenthesized literal may continue as re+imj only with no space
      // before the sign.
      if (sc.peek() == 'j') {
        ++sc.pos;
        term.coefficient *= Complex(0.0, 1.0);
      } else {
        const double value = sc.read_real();
        if (sc.peek() == 'j') {
          ++sc.pos;
          term.coefficient *= Complex(0.0, value);
        } else if ((sc.peek() == '+' || sc.peek() == '-')) {
          const std::size_t mark = sc.pos;
          Scanner probe{text};
          probe.pos = sc.pos;
          bool tail_is_imag = false;
          try {
            const Complex second = probe.read_signed_piece();
            tail_is_imag = second.imag() != 0.0 || probe.text[probe.pos - 1] == 'j';
          } catch (const std::invalid_argument&) {
            tail_is_imag = false;
          }
          if (tail_is_imag) {
            Scanner again{text};
            again.pos = mark;
            term.coefficient *= (Complex(value, 0.0) + again.read_signed_piece());
            sc.pos = again.pos;
          } else {
            term.coefficient *= value;
          }
        } else {
          term.coefficient *= value;
        }
      }
      have_coeff = true;
    }

    sc.skip_ws();
    if (sc.peek() == '*') {
      ++sc.pos;
      sc.skip_ws();
    }

    bool have_factor = false;
    while (sc.peek() == 'a') {
      ++sc.pos;
      const int index = sc.read_int();
      if (index < 1) {
        sc.fail("mode indices are 1-based");
      }
      int expo = 1;
      if (sc.peek() == '^') {
        ++sc.pos;
        expo = sc.read_int();
      }
      term.exponents[index - 1] += expo;
      max_index = std::max(max_index, index);
      have_factor = true;
      sc.skip_ws();
      if (sc.peek() == '*') {
        ++sc.pos;
        sc.skip_ws();
      }
    }
    if (!have_factor && !have_coeff) {
      sc.fail("expected a coefficient or a mode factor");
    }
    raw.push_back(std::move(term));

    sc.skip_ws();
    if (sc.done()) {
      break;
    }
    if (sc.peek() == '+' || sc.peek() == '-') {
      pending_sign = sc.peek() == '-' ? -1.0 : 1.0;
      ++sc.pos;
    } else {
      sc.fail("expected + or - between terms");
    }
  }

  const int modes = std::max(std::max(max_index, min_modes), 1);
  CreationPolynomial poly(modes);
  for (const RawTerm& term : raw) {
    std::vector<int> expo(modes, 0);
    for (const auto& [v, e] : term.exponents) {
      expo[v] = e;
    }
    poly.add_term(expo, term.coefficient);
  }
  return poly;
}

}  // namespace gatelab
