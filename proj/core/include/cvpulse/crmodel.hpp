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

#include <vector>

#include "cvpulse/gates.hpp"
#include "cvpulse/linalg.hpp"

namespace cvpulse {

// Cross-resonance Hamiltonian coefficients in rad/s. amplitude_A and
// phase_phi are drive metadata carried through untouched; the functional
// dependence omega(A, phi) is a config input, not a model.
struct CRCoefficients {
  double omega_ZI = 0.0;
  double omega_ZX = 0.0;
  double omega_ZY = 0.0;
  double omega_ZZ = 0.0;
  double omega_IX = 0.0;
  double omega_IY = 0.0;
  double omega_IZ = 0.0;
  double amplitude_A = 0.0;  // >= 0
  double phase_phi = 0.0;    // radians
};

enum class TrialKind { CV, CX };

struct TrialGateSpec {
  TrialKind kind;
  double tau_d_ns;             // >= 0
  double nominal_duration_ns;  // > 0: t_CV for CV, tau_CX for CX
};

// H = sum_P (omega_ZP/2) Z⊗P + sum_Q (omega_IQ/2) I⊗Q, P in {I,X,Y,Z},
// Q in {X,Y,Z}. Hermitian and traceless by construction.
HermitianOperator build_cr_hamiltonian(const CRCoefficients& c);

// exp(-i*t*H_CR), t in seconds.
Unitary evolve_cr(const CRCoefficients& c, double t_s);

// [ZX]^theta with the duration-to-angle map theta(t) = omega_ZX * t / pi.
Unitary zx_unitary(double theta);

// Trial gate [ZI]^k [ZX]^{theta(tau_d)} [IX]^k with k = 1/4 (CV) or 1/2 (CX)
// and theta(tau_d) = -tau_d/(4*nominal) for CV, -tau_d/(2*nominal) for CX.
Unitary trial_gate(const TrialGateSpec& spec);

// Echoed two-pulse sequence (X⊗I) U(c_minus, t) (X⊗I) U(c_plus, t).
// Conjugation by X⊗I flips every Z⊗* term; with sign-flipped c_minus the
// I⊗* terms cancel and the ZX angle doubles.
Unitary echo_composite(const CRCoefficients& c_plus,
                       const CRCoefficients& c_minus, double t_s);

struct SweepPoint {
  double tau_d_ns;
  double fidelity;
};

// F(tau_d) = process_fidelity(trial_gate, exact target). Matches the closed
// form cos^2(pi*dtheta/2) within 1e-10 at every grid point.
std::vector<SweepPoint> fidelity_sweep(TrialKind kind, double nominal_ns,
                                       const std::vector<double>& grid_ns,
                                       int jobs = 1);

}  // namespace cvpulse
