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
#include <vector>

#include "cvpulse/linalg.hpp"

namespace cvpulse {

struct SynthesisProblem {
  Mat target;  // dim-4 unitary
  Mat basis;   // dim-4 unitary, e.g. CV
  int k = 2;   // basis applications, 1..4
  int restarts = 16;
  std::uint64_t seed = 0;
  double tol = 1e-9;       // convergence threshold on 1 - F
  int max_sweeps = 20000;  // per-restart cap; boundary-class targets converge
                           // slowly and need most of it at tol 1e-9
  int jobs = 1;           // restarts run in parallel when > 1; result identical
};

// U3 angle triples (theta, phi, lambda) for the two qubits of one layer.
struct LocalLayer {
  std::array<double, 3> q0;
  std::array<double, 3> q1;
};

struct SynthesisResult {
  std::vector<LocalLayer> local_layers;  // k+1 layers, layer 0 applied first
  double achieved_fidelity = 0.0;
  bool converged = false;
};

// Maximizes process_fidelity(target, L_k B ... B L_0) over the 6(k+1) local
// angles: multi-start alternating per-layer trace maximization (orthogonal
// Procrustes via SVD on each tensor factor). Deterministic given seed;
// restart streams are derived per index so jobs > 1 changes nothing.
// Non-convergence is a result state, not an error.
SynthesisResult synthesize(const SynthesisProblem& p);

// Product L_k B ... B L_0 rebuilt from the stored angles.
Mat assemble_layers(const SynthesisResult& r, const Mat& basis);

// Recomputes the fidelity of the assembled product from scratch; matches
// achieved_fidelity within 1e-10.
double synthesis_certificate(const SynthesisResult& r, const Unitary& target,
                             const Unitary& basis);

}  // namespace cvpulse
