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

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cvpulse/gates.hpp"
#include "cvpulse/linalg.hpp"

namespace cvpulse {

// Hermitian, unit trace within 1e-10, eigenvalues >= -1e-8.
class DensityMatrix {
 public:
  explicit DensityMatrix(Mat m);  // throws on invariant violation
  const Mat& mat() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  Mat m_;
};

DensityMatrix pure_state(const Vec& psi);

// Bitstring keys have uniform length = num_qubits; character i is qubit i
// (most significant first). Counts are integers after simulation; readout
// mitigation may hold real-valued quasi-counts that still sum to shots.
struct CountVector {
  std::int64_t shots = 0;
  std::map<std::string, double> counts;
};

// Per-qubit 2x2 column-stochastic readout matrices, entry (r, c) =
// P(read r | prepared c).
struct ConfusionMatrix {
  std::vector<std::array<std::array<double, 2>, 2>> per_qubit;
};

// Uhlmann fidelity Tr[sqrt(sqrt(rho_exp) rho_ide sqrt(rho_exp))]^2.
double state_fidelity(const DensityMatrix& rho_exp,
                      const DensityMatrix& rho_ide);

// Rotates each qubit into the requested Pauli eigenbasis (X: H, Y: H S†,
// Z: identity) and samples bitstrings from the diagonal. Deterministic
// given seed.
CountVector simulate_counts(const DensityMatrix& state,
                            const std::vector<PauliLabel>& basis,
                            std::int64_t shots, std::uint64_t seed);

// Linear inversion over the complete 3^n Pauli basis set (keys like "XZ"):
// every Pauli expectation is averaged over all compatible measurement
// bases, rho = (1/2^n) sum <P> P, then the spectrum is projected onto the
// probability simplex (negative eigenvalues clipped, unit trace restored
// from the surviving ones). Incomplete basis set is an error.
DensityMatrix linear_inversion_tomography(
    const std::map<std::string, CountVector>& counts_by_basis);

// Tensor-product inverse of the per-qubit confusion matrices applied to the
// empirical distribution; negatives clipped to 0, then renormalized so the
// total equals shots exactly. Singular per-qubit matrix is an error.
CountVector mitigate_readout(const CountVector& raw, const ConfusionMatrix& cm);

// The 12 named three-qubit preparations used by the end-to-end demo:
// computational basis states plus |+10>, |1+0>, |++1>, |--1> with
// |+|-> = (|0> +- |1>)/sqrt(2).
std::vector<std::pair<std::string, Vec>> tomo_input_states();

}  // namespace cvpulse
