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

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "gatelab/factorization.hpp"
#include "gatelab/network_json.hpp"
#include "gatelab/phase_gate.hpp"
#include "gatelab/polynomial.hpp"
#include "gatelab/state_matrix.hpp"
#include "gatelab/toffoli.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitInternal = 3;

// Shortest round-trip decimal form, at most 17 significant digits.
std::string fmt(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

unsigned long long resolve_seed(const CLI::Option* seed_opt, unsigned long long flag_value) {
  if (seed_opt != nullptr && seed_opt->count() > 0) {
    return flag_value;
  }
  if (const char* env = std::getenv("GATE_LAB_SEED")) {
    unsigned long long parsed = 0;
    const auto res = std::from_chars(env, env + std::string(env).size(), parsed);
    if (res.ec == std::errc()) {
      return parsed;
    }
  }
  return 42;
}

gatelab::NetworkDescription conjugate_network(gatelab::NetworkDescription net) {
  for (gatelab::Element& e : net.elements) {
    if (auto* bs = std::get_if<gatelab::BeamSplitter>(&e)) {
      bs->phase = -bs->phase;
    } else {
      std::get<gatelab::PhaseShift>(e).angle = -std::get<gatelab::PhaseShift>(e).angle;
    }
  }
  return net;
}

int cmd_phase_synth(double phi, const std::string& out_path) {
  if (!(phi >= 0.0 && phi <= kTwoPi + 1e-12)) {
    std::cerr << "error: phi must lie in [0, 2pi] (radians)\n";
    return kExitBadInput;
  }
  gatelab::NetworkFile file;
  file.metadata.phi = phi;
  file.metadata.generator = "phase-synth";
  double synth_phi = std::min(phi, kTwoPi);
  if (synth_phi > kPi) {
    // diag(1,1,1,e^{i phi}) is the complex conjugate of the gate at 2pi - phi;
    // conjugating every element phase realizes it with the same network.
    file.network = conjugate_network(gatelab::build_network(kTwoPi - synth_phi));
    file.metadata.note = "relabeled: conjugated network synthesized at 2pi - phi";
    file.metadata.ps = gatelab::success_probability(kTwoPi - synth_phi);
  } else {
    file.network = gatelab::build_network(synth_phi);
    file.metadata.ps = gatelab::success_probability(synth_phi);
  }

  const gatelab::VerificationReport report = gatelab::verify_network(file.network, phi, 1e-9);
  if (!report.passed) {
    std::cerr << "error: synthesized network failed verification (deviation "
              << fmt(report.max_target_deviation) << ")\n";
    return kExitInternal;
  }
  try {
    gatelab::save_network(file, out_path);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInternal;
  }
  std::cout << "wrote " << out_path << " (ps = " << fmt(file.metadata.ps) << ")\n";
  return kExitOk;
}

// Evaluates one row per grid index in parallel and assembles them in index
// order, so the output bytes do not depend on scheduling.
std::vector<std::string> sweep_rows(int steps, const std::function<std::string(double)>& row,
                                    double from, double to) {
  std::vector<std::string> rows(steps);
  const int workers =
      std::max(1, std::min<int>(steps, int(std::thread::hardware_concurrency())));
  std::vector<std::future<void>> tasks;
  tasks.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (int k = w; k < steps; k += workers) {
        const double phi = from + (to - from) * k / (steps - 1);
        rows[k] = row(phi);
      }
    }));
  }
  for (auto& task : tasks) {
    task.get();
  }
  return rows;
}

int cmd_curve(const std::string& gate, double from, double to, int steps,
              const std::string& out_path, unsigned long long seed) {
  if (!(from >= 0.0 && to <= kPi + 1e-12 && from < to) || steps < 2) {
    std::cerr << "error: need 0 <= from < to <= pi and steps >= 2\n";
    return kExitBadInput;
  }
  std::string header;
  std::function<std::string(double)> row;
  if (gate == "phase") {
    header = "phi,ps_closed_form,ps_numeric,abs_diff\n";
    row = [seed](double phi) {
      gatelab::OptimumOptions opts;
      opts.seed = seed;
      const double closed = gatelab::success_probability(phi);
      const double numeric = gatelab::numeric_optimum(phi, opts);
      return fmt(phi) + "," + fmt(closed) + "," + fmt(numeric) + "," +
             fmt(std::abs(closed - numeric)) + "\n";
    };
  } else if (gate == "toffoli") {
    header = "phi,ps,x,y\n";
    row = [seed](double phi) {
      gatelab::ToffoliOptions opts;
      opts.seed = seed;
      const gatelab::ToffoliOptimum opt = gatelab::optimize_toffoli(phi, opts);
      return fmt(phi) + "," + fmt(opt.ps) + "," + fmt(opt.x) + "," + fmt(opt.y) + "\n";
    };
  } else {
    std::cerr << "error: --gate must be phase or toffoli\n";
    return kExitBadInput;
  }
  const std::vector<std::string> rows = sweep_rows(steps, row, from, to);

  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << out_path << "\n";
    return kExitInternal;
  }
  out << header;
  for (const std::string& r : rows) {
    out << r;
  }
  std::cout << "wrote " << out_path << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& network_path, double phi, double tol) {
  gatelab::NetworkFile file;
  try {
    file = gatelab::load_network(network_path);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitBadInput;
  }
  gatelab::VerificationReport report;
  try {
    report = gatelab::verify_network(file.network, phi, tol);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitBadInput;
  }

  const auto dim = report.induced.rows();
  std::cout << "induced logical operator (" << dim << "x" << dim << "):\n";
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      const gatelab::Complex v = report.induced(r, c);
      std::cout << (c == 0 ? "  " : "  ") << fmt(v.real()) << (v.imag() < 0 ? "-" : "+")
                << fmt(std::abs(v.imag())) << "j";
    }
    std::cout << "\n";
  }
  std::cout << "per-basis success probability:";
  for (double p : report.basis_success) {
    std::cout << " " << fmt(p);
  }
  std::cout << "\nmax target deviation: " << fmt(report.max_target_deviation)
            << "\nuniformity deviation: " << fmt(report.uniformity_deviation)
            << "\nlinearity deviation: " << fmt(report.linearity_deviation)
            << "\nresult: " << (report.passed ? "PASS" : "FAIL") << "\n";

  std::cout << "{\"passed\":" << (report.passed ? "true" : "false")
            << ",\"success_probability\":" << fmt(report.success_probability)
            << ",\"max_target_deviation\":" << fmt(report.max_target_deviation)
            << ",\"uniformity_deviation\":" << fmt(report.uniformity_deviation)
            << ",\"linearity_deviation\":" << fmt(report.linearity_deviation) << "}\n";
  return report.passed ? kExitOk : kExitVerifyFail;
}

int cmd_feasibility(const std::string& poly_text, const std::string& state, int modes,
                    int target_rank, unsigned long long seed) {
  gatelab::CreationPolynomial poly(1);
  try {
    if (state == "epr") {
      poly = gatelab::CreationPolynomial::parse(
          "0.7071067811865476 * a1 a3 + 0.7071067811865476 * a2 a4");
    } else if (state == "product") {
      poly = gatelab::CreationPolynomial::parse("a1 a2", 4);
    } else if (!state.empty()) {
      std::cerr << "error: --state must be epr or product\n";
      return kExitBadInput;
    } else {
      poly = gatelab::CreationPolynomial::parse(poly_text, modes);
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitBadInput;
  }

  std::cout << "polynomial: " << poly.to_string() << "\n";
  std::cout << "modes: " << poly.mode_count() << ", degree: " << poly.degree() << "\n";

  int rank = -1;
  if (poly.degree() == 2 && poly.is_homogeneous()) {
    rank = gatelab::photon_class_rank(gatelab::from_polynomial(poly));
    std::cout << "state-matrix rank: " << rank << "\n";
    std::cout << "additional photons needed from two single photons (rank 2): "
              << gatelab::min_additional_photons(2, rank) << "\n";
  }
  try {
    const bool constructible = gatelab::is_product_constructible(poly, seed);
    std::cout << "product-constructible (polynomial factorizable): "
              << (constructible ? "yes" : "no") << "\n";
  } catch (const gatelab::IndeterminateRankError&) {
    std::cout << "product-constructible (polynomial factorizable): indeterminate\n";
  }
  if (target_rank >= 0) {
    if (rank < 0) {
      std::cerr << "error: --target-rank needs a two-photon polynomial\n";
      return kExitBadInput;
    }
    std::cout << "additional photons needed for target rank " << target_rank << ": "
              << gatelab::min_additional_photons(rank, target_rank) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Post-selected linear-optical gate synthesis and verification"};
  app.require_subcommand(1);

  double phi = 0.0;
  std::string out_path;
  CLI::App* synth = app.add_subcommand("phase-synth", "Synthesize a controlled-phase network");
  synth->add_option("--phi", phi, "gate phase in radians, [0, 2pi]")->required();
  synth->add_option("--out", out_path, "output network JSON path")->required();

  std::string gate = "phase";
  double from = 0.0, to = kPi;
  int steps = 2;
  std::string curve_out;
  unsigned long long seed_flag = 42;
  CLI::App* curve = app.add_subcommand("curve", "Sweep optimal success probability over phi");
  curve->add_option("--gate", gate, "phase or toffoli");
  curve->add_option("--from", from, "start phase (radians)")->required();
  curve->add_option("--to", to, "end phase (radians)")->required();
  curve->add_option("--steps", steps, "number of grid points (>= 2)")->required();
  curve->add_option("--out", curve_out, "output CSV path")->required();
  CLI::Option* curve_seed = curve->add_option("--seed", seed_flag, "deterministic seed");

  std::string network_path;
  double verify_phi = 0.0;
  double tol = 1e-9;
  CLI::App* verify = app.add_subcommand("verify", "Verify a network file against its target");
  verify->add_option("--network", network_path, "network JSON path")->required();
  verify->add_option("--phi", verify_phi, "target phase (radians)")->required();
  verify->add_option("--tol", tol, "verification tolerance");

  std::string poly_text, state;
  int modes = 0;
  int target_rank = -1;
  CLI::App* feas = app.add_subcommand("feasibility", "Rank and factorizability of a state");
  CLI::Option* poly_opt = feas->add_option("--poly", poly_text, "creation polynomial text");
  CLI::Option* state_opt = feas->add_option("--state", state, "built-in state: epr or product");
  feas->add_option("--modes", modes, "minimum mode count for --poly");
  feas->add_option("--target-rank", target_rank, "report photons needed to reach this rank");
  CLI::Option* feas_seed = feas->add_option("--seed", seed_flag, "deterministic seed");
  poly_opt->excludes(state_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (synth->parsed()) {
      return cmd_phase_synth(phi, out_path);
    }
    if (curve->parsed()) {
      return cmd_curve(gate, from, to, steps, curve_out, resolve_seed(curve_seed, seed_flag));
    }
    if (verify->parsed()) {
      return cmd_verify(network_path, verify_phi, tol);
    }
    if (feas->parsed()) {
      if (poly_opt->count() == 0 && state_opt->count() == 0) {
        std::cerr << "error: feasibility needs --poly or --state\n";
        return kExitBadInput;
      }
      return cmd_feasibility(poly_text, state, modes, target_rank,
                             resolve_seed(feas_seed, seed_flag));
    }
  } catch (const std::domain_error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInternal;
  }
  return kExitBadInput;
}
