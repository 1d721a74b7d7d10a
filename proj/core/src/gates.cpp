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

#include "cvpulse/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace cvpulse {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

Mat pauli_mat(PauliLabel p) {
  Mat m(2, 2);
  switch (p) {
    case PauliLabel::I: m << 1, 0, 0, 1; break;
    case PauliLabel::X: m << 0, 1, 1, 0; break;
    case PauliLabel::Y: m << 0, -kI, kI, 0; break;
    case PauliLabel::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

}  // namespace

Mat pauli(PauliLabel p) { return pauli_mat(p); }

PauliLabel pauli_from_code(int code) {
  switch (code) {
    case 0: return PauliLabel::I;
    case 1: return PauliLabel::X;
    case 2: return PauliLabel::Y;
    case 3: return PauliLabel::Z;
    default: throw std::invalid_argument("pauli_from_code: code must be 0..3");
  }
}

PauliLabel pauli_from_char(char c) {
  switch (c) {
    case 'I': return PauliLabel::I;
    case 'X': return PauliLabel::X;
    case 'Y': return PauliLabel::Y;
    case 'Z': return PauliLabel::Z;
    default: throw std::invalid_argument(std::string("pauli_from_char: unknown label '") + c + "'");
  }
}

Unitary de_power(PauliLabel d, PauliLabel e, double theta) {
  // exp(-i (pi/2) theta D⊗E); D⊗E is an involution, so the series closes.
  Mat de = kron(pauli_mat(d), pauli_mat(e));
  double ang = 0.5 * kPi * theta;
  Mat u = std::cos(ang) * Mat::Identity(4, 4) - kI * std::sin(ang) * de;
  return Unitary(u);
}

Unitary de_power(PauliLabel e, double theta) {
  Mat p = pauli_mat(e);
  double ang = 0.5 * kPi * theta;
  Mat u = std::cos(ang) * Mat::Identity(2, 2) - kI * std::sin(ang) * p;
  return Unitary(u);
}

Unitary u3(double theta, double phi, double lam) {
  Mat m(2, 2);
  double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  m(0, 0) = c;
  m(0, 1) = -std::exp(kI * lam) * s;
  m(1, 0) = std::exp(kI * phi) * s;
  m(1, 1) = std::exp(kI * (phi + lam)) * c;
  return Unitary(m);
}

Unitary u2(double phi, double lam) { return u3(kPi / 2.0, phi, lam); }

const char* to_string(GateName g) {
  switch (g) {
    case GateName::CV: return "CV";
    case GateName::CVdg: return "CVdg";
    case GateName::CX: return "CX";
    case GateName::SWAP: return "SWAP";
    case GateName::iSWAP: return "iSWAP";
    case GateName::DCX: return "DCX";
    case GateName::SQiSWAP: return "SQiSWAP";
    case GateName::SQSWAP: return "SQSWAP";
    case GateName::Toffoli: return "Toffoli";
    case GateName::H: return "H";
    case GateName::X: return "X";
    case GateName::Z: return "Z";
    case GateName::T: return "T";
    case GateName::Tdg: return "Tdg";
    case GateName::U2: return "U2";
    case GateName::U3: return "U3";
    case GateName::DEpow: return "DEpow";
  }
  throw std::logic_error("to_string: invalid gate name");
}

GateName gate_from_string(const std::string& s) {
  static const std::unordered_map<std::string, GateName> map = {
      {"CV", GateName::CV},       {"cv", GateName::CV},
      {"CVdg", GateName::CVdg},   {"cvdg", GateName::CVdg},
      {"CX", GateName::CX},       {"cx", GateName::CX},
      {"SWAP", GateName::SWAP},   {"swap", GateName::SWAP},
      {"iSWAP", GateName::iSWAP}, {"iswap", GateName::iSWAP},
      {"DCX", GateName::DCX},     {"dcx", GateName::DCX},
      {"SQiSWAP", GateName::SQiSWAP}, {"sqiswap", GateName::SQiSWAP},
      {"SQSWAP", GateName::SQSWAP},   {"sqswap", GateName::SQSWAP},
      {"Toffoli", GateName::Toffoli}, {"toffoli", GateName::Toffoli}, {"ccx", GateName::Toffoli},
      {"H", GateName::H},         {"h", GateName::H},
      {"X", GateName::X},         {"x", GateName::X},
      {"Z", GateName::Z},         {"z", GateName::Z},
      {"T", GateName::T},         {"t", GateName::T},
      {"Tdg", GateName::Tdg},     {"tdg", GateName::Tdg},
      {"U2", GateName::U2},       {"u2", GateName::U2},
      {"U3", GateName::U3},       {"u3", GateName::U3},
      {"DEpow", GateName::DEpow}, {"depow", GateName::DEpow},
  };
  auto it = map.find(s);
  if (it == map.end()) throw std::invalid_argument("gate_from_string: unknown gate '" + s + "'");
  return it->second;
}

int gate_num_qubits(GateName g) {
  switch (g) {
    case GateName::H:
    case GateName::X:
    case GateName::Z:
    case GateName::T:
    case GateName::Tdg:
    case GateName::U2:
    case GateName::U3:
      return 1;
    case GateName::Toffoli:
      return 3;
    default:
      return 2;
  }
}

int gate_param_count(GateName g) {
  switch (g) {
    case GateName::U2: return 2;
    case GateName::U3: return 3;
    case GateName::DEpow: return 3;
    default: return 0;
  }
}

Unitary named_gate(GateName g, const std::vector<double>& params) {
  const std::size_t need = static_cast<std::size_t>(gate_param_count(g));
  if (params.size() != need) {
    throw std::invalid_argument(std::string("named_gate: ") + to_string(g) + " expects " +
                                std::to_string(need) + " params, got " +
                                std::to_string(params.size()));
  }
  switch (g) {
    case GateName::CV: {
      Mat m = Mat::Identity(4, 4);
      Complex p = 0.5 * Complex(1, 1), q = 0.5 * Complex(1, -1);
      m(2, 2) = p; m(2, 3) = q;
      m(3, 2) = q; m(3, 3) = p;
      return Unitary(m);
    }
    case GateName::CVdg:
      return Unitary(named_gate(GateName::CV).mat().adjoint());
    case GateName::CX: {
      Mat m = Mat::Zero(4, 4);
      m(0, 0) = 1; m(1, 1) = 1; m(2, 3) = 1; m(3, 2) = 1;
      return Unitary(m);
    }
    case GateName::SWAP: {
      Mat m = Mat::Zero(4, 4);
      m(0, 0) = 1; m(1, 2) = 1; m(2, 1) = 1; m(3, 3) = 1;
      return Unitary(m);
    }
    case GateName::iSWAP: {
      Mat m = Mat::Zero(4, 4);
      m(0, 0) = 1; m(1, 2) = kI; m(2, 1) = kI; m(3, 3) = 1;
      return Unitary(m);
    }
    case GateName::DCX: {
      Mat m = Mat::Zero(4, 4);
      m(0, 0) = 1; m(1, 3) = 1; m(2, 1) = 1; m(3, 2) = 1;
      return Unitary(m);
    }
    case GateName::SQiSWAP: {
      Mat m = Mat::Identity(4, 4);
      double r = 1.0 / std::sqrt(2.0);
      m(1, 1) = r; m(1, 2) = kI * r;
      m(2, 1) = kI * r; m(2, 2) = r;
      return Unitary(m);
    }
    case GateName::SQSWAP: {
      Mat m = Mat::Identity(4, 4);
      Complex p = 0.5 * Complex(1, 1), q = 0.5 * Complex(1, -1);
      m(1, 1) = p; m(1, 2) = q;
      m(2, 1) = q; m(2, 2) = p;
      return Unitary(m);
    }
    case GateName::Toffoli: {
      Mat m = Mat::Identity(8, 8);
      m(6, 6) = 0; m(7, 7) = 0; m(6, 7) = 1; m(7, 6) = 1;
      return Unitary(m);
    }
    case GateName::H: {
      Mat m(2, 2);
      double r = 1.0 / std::sqrt(2.0);
      m << r, r, r, -r;
      return Unitary(m);
    }
    case GateName::X:
      return Unitary(pauli_mat(PauliLabel::X));
    case GateName::Z:
      return Unitary(pauli_mat(PauliLabel::Z));
    case GateName::T: {
      Mat m = Mat::Identity(2, 2);
      m(1, 1) = std::exp(kI * (kPi / 4.0));
      return Unitary(m);
    }
    case GateName::Tdg: {
      Mat m = Mat::Identity(2, 2);
      m(1, 1) = std::exp(-kI * (kPi / 4.0));
      return Unitary(m);
    }
    case GateName::U2:
      return u2(params[0], params[1]);
    case GateName::U3:
      return u3(params[0], params[1], params[2]);
    case GateName::DEpow: {
      int dc = static_cast<int>(std::lround(params[0]));
      int ec = static_cast<int>(std::lround(params[1]));
      return de_power(pauli_from_code(dc), pauli_from_code(ec), params[2]);
    }
  }
  throw std::logic_error("named_gate: invalid gate name");
}

double process_fidelity(const Unitary& u, const Unitary& v) {
  if (u.dim() != v.dim()) throw std::invalid_argument("process_fidelity: dimension mismatch");
  const double d = static_cast<double>(u.dim());
  Complex tr = (u.mat().adjoint() * v.mat()).trace();
  return std::norm(tr) / (d * d);
}

double average_gate_fidelity(const Unitary& u, const Unitary& v) {
  const double d = static_cast<double>(u.dim());
  return (d * process_fidelity(u, v) + 1.0) / (d + 1.0);
}

Unitary reverse_qubit_order(const Unitary& u) {
  const Eigen::Index dim = u.dim();
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if ((Eigen::Index{1} << n) != dim) {
    throw std::invalid_argument("reverse_qubit_order: dimension not a power of two");
  }
  auto rev = [n](Eigen::Index x) {
    Eigen::Index y = 0;
    for (int b = 0; b < n; ++b) {
      if (x & (Eigen::Index{1} << b)) y |= Eigen::Index{1} << (n - 1 - b);
    }
    return y;
  };
  Mat out(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) out(rev(i), rev(j)) = u.mat()(i, j);
  }
  return Unitary(out);
}

}  // namespace cvpulse
