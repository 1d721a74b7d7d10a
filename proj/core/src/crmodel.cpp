// Copyright 2026 The cvpulse Authors
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

#include "cvpulse/crmodel.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace cvpulse {

HermitianOperator build_cr_hamiltonian(const CRCoefficients& c) {
  const Mat I = pauli(PauliLabel::I);
  const Mat X = pauli(PauliLabel::X);
  const Mat Y = pauli(PauliLabel::Y);
  const Mat Z = pauli(PauliLabel::Z);
  Mat h = Mat::Zero(4, 4);
  h += 0.5 * c.omega_ZI * kron(Z, I);
  h += 0.5 * c.omega_ZX * kron(Z, X);
  h += 0.5 * c.omega_ZY * kron(Z, Y);
  h += 0.5 * c.omega_ZZ * kron(Z, Z);
  h += 0.5 * c.omega_IX * kron(I, X);
  h += 0.5 * c.omega_IY * kron(I, Y);
  h += 0.5 * c.omega_IZ * kron(I, Z);
  return HermitianOperator(h);
}

Unitary evolve_cr(const CRCoefficients& c, double t_s) {
  if (!std::isfinite(t_s)) throw std::invalid_argument("evolve_cr: non-finite time");
  return expm_hermitian(build_cr_hamiltonian(c), t_s);
}

Unitary zx_unitary(double theta) {
  return de_power(PauliLabel::Z, PauliLabel::X, theta);
}

namespace {

double trial_theta(const TrialGateSpec& spec) {
  if (spec.nominal_duration_ns <= 0.0) {
    throw std::invalid_argument("trial_gate: nominal duration must be positive");
  }
  if (spec.tau_d_ns < 0.0) {
    throw std::invalid_argument("trial_gate: tau_d must be non-negative");
  }
  return spec.kind == TrialKind::CV ? -spec.tau_d_ns / (4.0 * spec.nominal_duration_ns)
                                    : -spec.tau_d_ns / (2.0 * spec.nominal_duration_ns);
}

double dressing_power(TrialKind kind) {
  return kind == TrialKind::CV ? 0.25 : 0.5;
}

}  // namespace

Unitary trial_gate(const TrialGateSpec& spec) {
  const double k = dressing_power(spec.kind);
  const Mat zi = de_power(PauliLabel::Z, PauliLabel::I, k).mat();
  const Mat ix = de_power(PauliLabel::I, PauliLabel::X, k).mat();
  const Mat zx = zx_unitary(trial_theta(spec)).mat();
  return Unitary(zi * zx * ix);
}

Unitary echo_composite(const CRCoefficients& c_plus,
                       const CRCoefficients& c_minus, double t_s) {
  const Mat xi = kron(pauli(PauliLabel::X), pauli(PauliLabel::I));
  const Mat up = evolve_cr(c_plus, t_s).mat();
  const Mat um = evolve_cr(c_minus, t_s).mat();
  return Unitary(xi * um * xi * up);
}

std::vector<SweepPoint> fidelity_sweep(TrialKind kind, double nominal_ns,
                                       const std::vector<double>& grid_ns,
                                       int jobs) {
  if (jobs < 1) throw std::invalid_argument("fidelity_sweep: jobs must be >= 1");
  const double k = dressing_power(kind);
  const Unitary target = [&] {
    const Mat zi = de_power(PauliLabel::Z, PauliLabel::I, k).mat();
    const Mat ix = de_power(PauliLabel::I, PauliLabel::X, k).mat();
    const Mat zx = zx_unitary(-k).mat();
    return Unitary(zi * zx * ix);
  }();

  std::vector<SweepPoint> out(grid_ns.size());
  auto worker = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      TrialGateSpec spec{kind, grid_ns[i], nominal_ns};
      out[i] = SweepPoint{grid_ns[i], process_fidelity(trial_gate(spec), target)};
    }
  };
  if (jobs == 1 || grid_ns.size() < 2) {
    worker(0, grid_ns.size());
    return out;
  }
  const std::size_t n = grid_ns.size();
  const std::size_t chunk = (n + static_cast<std::size_t>(jobs) - 1) / static_cast<std::size_t>(jobs);
  std::vector<std::thread> pool;
  for (std::size_t b = 0; b < n; b += chunk) {
    pool.emplace_back(worker, b, std::min(n, b + chunk));
  }
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace cvpulse
