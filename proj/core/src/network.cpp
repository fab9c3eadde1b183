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

#include "gatelab/network.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace gatelab {

namespace {

void check_mode(int m, int dim, const char* what) {
  if (m < 0 || m >= dim) {
    throw std::invalid_argument(std::string(what) + ": mode index out of range");
  }
}

}  // namespace

DualRailLayout NetworkDescription::layout() const {
  return DualRailLayout{qubits, ancillas};
}

void NetworkDescription::validate() const {
  if (mode_count < 1) {
    throw std::invalid_argument("network: mode count must be positive");
  }
  for (const Element& e : elements) {
    if (const auto* bs = std::get_if<BeamSplitter>(&e)) {
      check_mode(bs->mode_a, mode_count, "beamsplitter");
      check_mode(bs->mode_b, mode_count, "beamsplitter");
      if (bs->mode_a >= bs->mode_b) {
        throw std::invalid_argument("beamsplitter: requires mode_a < mode_b");
      }
      if (!(bs->transmittivity >= 0.0 && bs->transmittivity <= 1.0)) {
        throw std::invalid_argument("beamsplitter: transmittivity outside [0, 1]");
      }
    } else {
      const auto& ps = std::get<PhaseShift>(e);
      check_mode(ps.mode, mode_count, "phaseshift");
    }
  }
  layout().validate(mode_count);
}

ComplexMatrix element_matrix(const Element& e, int dim) {
  ComplexMatrix m = ComplexMatrix::Identity(dim, dim);
  if (const auto* bs = std::get_if<BeamSplitter>(&e)) {
    const double t = bs->transmittivity;
    const double r = std::sqrt(std::max(1.0 - t * t, 0.0));
    const Complex rp = r * std::exp(Complex(0.0, bs->phase));
    m(bs->mode_a, bs->mode_a) = t;
    m(bs->mode_a, bs->mode_b) = rp;
    m(bs->mode_b, bs->mode_a) = -std::conj(rp);
    m(bs->mode_b, bs->mode_b) = t;
  } else {
    const auto& ps = std::get<PhaseShift>(e);
    m(ps.mode, ps.mode) = std::exp(Complex(0.0, ps.angle));
  }
  return m;
}

ComplexMatrix compose_elements(const NetworkDescription& net) {
  net.validate();
  ComplexMatrix total = ComplexMatrix::Identity(net.mode_count, net.mode_count);
  for (const Element& e : net.elements) {
    total = element_matrix(e, net.mode_count) * total;
  }
  return total;
}

namespace {

// Propagates a logical superposition through the network and measures its
// worst-case disagreement with the induced operator acting on the logical
// amplitude vector.
double superposition_deviation(const ComplexMatrix& u, const DualRailLayout& layout,
                               const ComplexMatrix& induced, const ComplexVector& logical_in) {
  const int nq = static_cast<int>(layout.qubits.size());
  const int dim = static_cast<int>(u.rows());
  const int logical_dim = 1 << nq;

  auto pattern = [&](int index) {
    OccupationVector occ(dim, 0);
    for (int q = 0; q < nq; ++q) {
      const int bit = (index >> (nq - 1 - q)) & 1;
      occ[bit ? layout.qubits[q].second : layout.qubits[q].first] = 1;
    }
    return occ;
  };

  FockState in(dim);
  for (int k = 0; k < logical_dim; ++k) {
    if (logical_in(k) != Complex(0.0, 0.0)) {
      in.add(pattern(k), logical_in(k));
    }
  }
  const FockState out = apply_network(u, in);
  const ComplexVector expected = induced * logical_in;
  double dev = 0.0;
  for (int k = 0; k < logical_dim; ++k) {
    dev = std::max(dev, std::abs(out.amplitude(pattern(k)) - expected(k)));
  }
  return dev;
}

}  // namespace

VerificationReport verify_network(const NetworkDescription& net, double phi, double tol) {
  const ComplexMatrix u = compose_elements(net);
  if (!is_unitary(u, 1e-10)) {
    throw std::invalid_argument("verify_network: composed matrix is not unitary");
  }
  const DualRailLayout layout = net.layout();
  const int nq = static_cast<int>(layout.qubits.size());
  const int logical_dim = 1 << nq;

  VerificationReport report;
  report.induced = induced_logical_operator(u, layout);

  report.basis_success.resize(logical_dim);
  double mean = 0.0;
  for (int k = 0; k < logical_dim; ++k) {
    report.basis_success[k] = report.induced.col(k).squaredNorm();
    mean += report.basis_success[k];
  }
  mean /= logical_dim;
  report.success_probability = mean;
  for (double p : report.basis_success) {
    report.uniformity_deviation = std::max(report.uniformity_deviation, std::abs(p - mean));
  }

  // Align one global phase on the (0,0) entry, then compare against the
  // common magnitude times diag(1, ..., 1, e^{i phi}).
  ComplexMatrix aligned = report.induced;
  const Complex lead = aligned(0, 0);
  if (std::abs(lead) > 0.0) {
    aligned *= std::conj(lead) / std::abs(lead);
  }
  const double magnitude = std::abs(lead);
  ComplexMatrix target = ComplexMatrix::Zero(logical_dim, logical_dim);
  for (int k = 0; k < logical_dim; ++k) {
    target(k, k) = magnitude;
  }
  target(logical_dim - 1, logical_dim - 1) = magnitude * std::exp(Complex(0.0, phi));
  report.max_target_deviation = (aligned - target).cwiseAbs().maxCoeff();

  ComplexVector uniform = ComplexVector::Constant(logical_dim, 1.0 / std::sqrt(double(logical_dim)));
  std::mt19937_64 gen(0x5eed5eedULL);
  ComplexVector random_state(logical_dim);
  for (int k = 0; k < logical_dim; ++k) {
    const double re = (double(gen() >> 11) / 9007199254740992.0) * 2.0 - 1.0;
    const double im = (double(gen() >> 11) / 9007199254740992.0) * 2.0 - 1.0;
    random_state(k) = Complex(re, im);
  }
  random_state /= std::sqrt(random_state.squaredNorm());
  report.linearity_deviation =
      std::max(superposition_deviation(u, layout, report.induced, uniform),
               superposition_deviation(u, layout, report.induced, random_state));

  report.passed = report.max_target_deviation <= tol && report.uniformity_deviation <= tol &&
                  report.linearity_deviation <= tol;
  return report;
}

}  // namespace gatelab
