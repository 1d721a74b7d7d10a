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

#include <string>
#include <vector>

#include "cvpulse/linalg.hpp"

namespace cvpulse {

enum class PauliLabel { I, X, Y, Z };

// Closed gate enumeration. U2, U3, DEpow carry 2, 3, 3 real parameters;
// DEpow encodes its Pauli factors as [d_code, e_code, theta] with codes
// 0=I, 1=X, 2=Y, 3=Z.
enum class GateName {
  CV, CVdg, CX, SWAP, iSWAP, DCX, SQiSWAP, SQSWAP, Toffoli,
  H, X, Z, T, Tdg, U2, U3, DEpow,
};

const char* to_string(GateName g);
GateName gate_from_string(const std::string& s);  // throws on unknown name
int gate_num_qubits(GateName g);
int gate_param_count(GateName g);

Mat pauli(PauliLabel p);
PauliLabel pauli_from_code(int code);             // throws outside 0..3
PauliLabel pauli_from_char(char c);               // throws outside IXYZ

// [DE]^theta = exp(-i*pi*theta/2 * D⊗E).
Unitary de_power(PauliLabel d, PauliLabel e, double theta);
// Single-qubit form [D]^theta = exp(-i*pi*theta/2 * D).
Unitary de_power(PauliLabel d, double theta);

// u2(phi, lam) = (1/sqrt2) [[1, -e^{i lam}], [e^{i phi}, e^{i(phi+lam)}]].
Unitary u2(double phi, double lam);
// u3(theta, phi, lam) =
//   [[cos(t/2), -e^{i lam} sin(t/2)], [e^{i phi} sin(t/2), e^{i(phi+lam)} cos(t/2)]].
Unitary u3(double theta, double phi, double lam);

// Matrix for a named gate. Two-qubit convention: first qubit = control =
// most significant tensor factor. CV is controlled-sqrt(X); CV^2 = CX.
Unitary named_gate(GateName name, const std::vector<double>& params = {});

// |Tr(u†v)|^2 / d^2; 1 iff u = e^{i alpha} v.
double process_fidelity(const Unitary& u, const Unitary& v);
// (|Tr(u†v)|^2 + d) / (d^2 + d); reporting variant only, never optimized.
double average_gate_fidelity(const Unitary& u, const Unitary& v);

// Conversion to least-significant-first qubit ordering (bit-reversal
// permutation conjugation) for interchange with external data.
Unitary reverse_qubit_order(const Unitary& u);

}  // namespace cvpulse
