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

#include "gatelab/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "gatelab/permanent.hpp"

namespace gatelab {

namespace {

int occupation_total(const OccupationVector& occ) {
  int total = 0;
  for (int c : occ) {
    if (c < 0) {
      throw std::invalid_argument("occupation counts must be non-negative");
    }
    total += c;
  }
  return total;
}

double factorial_product(const OccupationVector& occ) {
  double prod = 1.0;
  for (int c : occ) {
    for (int k = 2; k <= c; ++k) {
      prod *= k;
    }
  }
  return prod;
}

}  // namespace

FockState::FockState(int mode_count) : mode_count_(mode_count) {
  if (mode_count < 1) {
    throw std::invalid_argument("FockState: mode count must be positive");
  }
}

FockState FockState::vacuum(int mode_count) {
  FockState s(mode_count);
  s.add(OccupationVector(mode_count, 0), 1.0);
  return s;
}

FockState FockState::basis_state(const OccupationVector& occ, Complex amplitude) {
  FockState s(static_cast<int>(occ.size()));
  s.add(occ, amplitude);
  return s;
}

void FockState::add(const OccupationVector& occ, Complex amplitude) {
  if (static_cast<int>(occ.size()) != mode_count_) {
    throw std::invalid_argument("FockState: occupation length mismatch");
  }
  const int total = occupation_total(occ);
  if (!terms_.empty() && total != total_photons()) {
    throw std::invalid_argument("FockState: mixed photon numbers in one state");
  }
  auto [it, inserted] = terms_.try_emplace(occ, amplitude);
  if (!inserted) {
    it->second += amplitude;
  }
  if (std::abs(it->second) <= kPruneThreshold) {
    terms_.erase(it);
  }
}

Complex FockState::amplitude(const OccupationVector& occ) const {
  auto it = terms_.find(occ);
  return it == terms_.end() ? Complex(0.0, 0.0) : it->second;
}

double FockState::squared_norm() const {
  double total = 0.0;
  for (const auto& [occ, amp] : terms_) {
    total += std::norm(amp);
  }
  return total;
}

int FockState::total_photons() const {
  if (terms_.empty()) {
    return -1;
  }
  return occupation_total(terms_.begin()->first);
}

void FockState::prune(double eps) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it = std::abs(it->second) <= eps ? terms_.erase(it) : std::next(it);
  }
}

Complex transition_amplitude(const ComplexMatrix& u, const OccupationVector& input,
                             const OccupationVector& output) {
  const int dim = static_cast<int>(u.rows());
  if (u.cols() != dim) {
    throw std::invalid_argument("transition_amplitude: matrix must be square");
  }
  if (static_cast<int>(input.size()) != dim || static_cast<int>(output.size()) != dim) {
    throw std::invalid_argument("transition_amplitude: occupation length mismatch");
  }
  const int n_in = occupation_total(input);
  const int n_out = occupation_total(output);
  if (n_in != n_out) {
    return Complex(0.0, 0.0);
  }
  if (n_in == 0) {
    return Complex(1.0, 0.0);
  }

  ComplexMatrix sub(n_out, n_in);
  int r = 0;
  for (int i = 0; i < dim; ++i) {
    for (int k = 0; k < output[i]; ++k, ++r) {
      int c = 0;
      for (int j = 0; j < dim; ++j) {
        for (int l = 0; l < input[j]; ++l, ++c) {
          sub(r, c) = u(i, j);
        }
      }
    }
  }
  const double norm = std::sqrt(factorial_product(input) * factorial_product(output));
  return permanent(sub) / norm;
}

FockState apply_network(const ComplexMatrix& u, const FockState& s) {
  const int dim = static_cast<int>(u.rows());
  if (u.cols() != dim) {
    throw std::invalid_argument("apply_network: matrix must be square");
  }
  if (dim != s.mode_count()) {
    throw std::invalid_argument("apply_network: dimension mismatch");
  }

  FockState out(dim);
  // Monomial coefficients of the substituted creation-operator polynomial.
  std::map<OccupationVector, Complex> poly;
  for (const auto& [occ, amp] : s.terms()) {
    poly.clear();
    poly.emplace(OccupationVector(dim, 0), amp / std::sqrt(factorial_product(occ)));
    for (int mode = 0; mode < dim; ++mode) {
      for (int rep = 0; rep < occ[mode]; ++rep) {
        std::map<OccupationVector, Complex> next;
        for (const auto& [expo, coeff] : poly) {
          for (int target = 0; target < dim; ++target) {
            const Complex w = u(target, mode);
            if (w == Complex(0.0, 0.0)) {
              continue;
            }
            OccupationVector bumped = expo;
            ++bumped[target];
            next[std::move(bumped)] += coeff * w;
          }
        }
        poly = std::move(next);
      }
    }
    for (const auto& [expo, coeff] : poly) {
      out.add(expo, coeff * std::sqrt(factorial_product(expo)));
    }
  }
  out.prune();
  return out;
}

std::pair<FockState, double> post_select(const FockState& s, const std::vector<int>& modes,
                                         const OccupationVector& pattern) {
  if (modes.size() != pattern.size()) {
    throw std::invalid_argument("post_select: pattern length mismatch");
  }
  std::vector<bool> selected(s.mode_count(), false);
  for (int m : modes) {
    if (m < 0 || m >= s.mode_count() || selected[m]) {
      throw std::invalid_argument("post_select: bad mode index");
    }
    selected[m] = true;
  }
  const int remaining = s.mode_count() - static_cast<int>(modes.size());
  if (remaining < 1) {
    throw std::invalid_argument("post_select: no modes would remain");
  }

  FockState kept(remaining);
  double probability = 0.0;
  for (const auto& [occ, amp] : s.terms()) {
    bool match = true;
    for (std::size_t k = 0; k < modes.size(); ++k) {
      if (occ[modes[k]] != pattern[k]) {
        match = false;
        break;
      }
    }
    if (!match) {
      continue;
    }
    OccupationVector rest;
    rest.reserve(remaining);
    for (int m = 0; m < s.mode_count(); ++m) {
      if (!selected[m]) {
        rest.push_back(occ[m]);
      }
    }
    kept.add(rest, amp);
    probability += std::norm(amp);
  }
  return {std::move(kept), probability};
}

int DualRailLayout::mode_count() const {
  return 2 * static_cast<int>(qubits.size()) + static_cast<int>(ancillas.size());
}

void DualRailLayout::validate(int dim) const {
  if (qubits.empty()) {
    throw std::invalid_argument("layout: at least one qubit required");
  }
  std::vector<bool> used(dim, false);
  auto claim = [&](int m) {
    if (m < 0 || m >= dim || used[m]) {
      throw std::invalid_argument("layout: mode indices overlapping or out of range");
    }
    used[m] = true;
  };
  for (const auto& [zero, one] : qubits) {
    claim(zero);
    claim(one);
  }
  for (int a : ancillas) {
    claim(a);
  }
  if (mode_count() != dim) {
    throw std::invalid_argument("layout: modes not fully assigned");
  }
}

ComplexMatrix induced_logical_operator(const ComplexMatrix& u, const DualRailLayout& layout) {
  const int dim = static_cast<int>(u.rows());
  layout.validate(dim);
  const int nq = static_cast<int>(layout.qubits.size());
  const int logical_dim = 1 << nq;

  auto pattern = [&](int index) {
    OccupationVector occ(dim, 0);
    for (int q = 0; q < nq; ++q) {
      const int bit = (index >> (nq - 1 - q)) & 1;
      occ[bit ? layout.qubits[q].second : layout.qubits[q].first] = 1;
    }
    return occ;
  };

  ComplexMatrix op(logical_dim, logical_dim);
  for (int in = 0; in < logical_dim; ++in) {
    const OccupationVector occ_in = pattern(in);
    for (int out = 0; out < logical_dim; ++out) {
      op(out, in) = transition_amplitude(u, occ_in, pattern(out));
    }
  }
  return op;
}

}  // namespace gatelab
