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

#include "cvpulse/weyl.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <Eigen/Eigenvalues>

#include "cvpulse/gates.hpp"

namespace cvpulse {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSnap = 1e-10;
const Complex kImag(0.0, 1.0);

Mat magic_basis() {
  Mat m(4, 4);
  const double r = 1.0 / std::sqrt(2.0);
  m << r, 0, 0, r * kImag,
       0, r * kImag, r, 0,
       0, r * kImag, -r, 0,
       r, 0, 0, -r * kImag;
  return m;
}

// U scaled into SU(4) by the principal quartic root of det(U); the branch
// ambiguity is absorbed downstream (phase-sum repair, G -> -G invariance).
Mat special_form(const Unitary& u) {
  if (u.dim() != 4) throw std::invalid_argument("canonical_coordinates: need a 4x4 unitary");
  Complex d = u.mat().determinant();
  return u.mat() / std::pow(d, 0.25);
}

// Chamber representatives of the orbit of a coordinate triple. Orbit moves:
// even sign flips, per-coordinate mod pi, permutations (via sort). The four
// flip patterns suffice; the remaining permutation variants never beat them.
std::vector<std::array<double, 3>> fold_triple(const std::array<double, 3>& t) {
  static constexpr int kFlips[4][3] = {{1, 1, 1}, {-1, -1, 1}, {-1, 1, -1}, {1, -1, -1}};
  std::vector<std::array<double, 3>> out;
  for (const auto& fl : kFlips) {
    std::array<double, 3> v{};
    for (int i = 0; i < 3; ++i) {
      double y = fl[i] * t[i];
      y -= kPi * std::floor(y / kPi);
      if (y < kSnap || y > kPi - kSnap) y = 0.0;
      v[i] = y;
    }
    std::sort(v.rbegin(), v.rend());
    if (v[0] + v[1] <= kPi + 1e-12) out.push_back(v);
  }
  return out;
}

double require_gamma(double gamma) {
  if (!(gamma > 0.0 && gamma <= kPi / 2.0)) {
    throw std::invalid_argument("reachability: gamma must lie in (0, pi/2]");
  }
  return gamma;
}

}  // namespace

WeylPoint canonical_coordinates(const Unitary& u) {
  static const Mat kMagic = magic_basis();
  const Mat m = kMagic.adjoint() * special_form(u) * kMagic;
  const Mat g = m * m.transpose();

  Eigen::ComplexEigenSolver<Mat> es(g);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("canonical_coordinates: eigendecomposition failed");
  }
  std::array<double, 4> phi{};
  double sum = 0.0;
  for (int i = 0; i < 4; ++i) {
    phi[i] = std::arg(es.eigenvalues()(i)) / 2.0;  // in (-pi/2, pi/2]
    sum += phi[i];
  }
  // Eigenphase sum must be 0 mod pi; redistribute the integer excess onto
  // the extreme entries so each shifted phase stays in range.
  const int r = static_cast<int>(std::lround(sum / kPi));
  std::sort(phi.rbegin(), phi.rend());
  if (r > 0) {
    for (int i = 0; i < r; ++i) phi[static_cast<std::size_t>(i)] -= kPi;
  } else if (r < 0) {
    for (int i = 0; i < -r; ++i) phi[static_cast<std::size_t>(3 - i)] += kPi;
  }
  std::sort(phi.rbegin(), phi.rend());

  const std::array<double, 3> cand = {phi[0] + phi[1], phi[0] + phi[2], -(phi[1] + phi[2])};
  auto reps = fold_triple(cand);
  if (reps.empty()) throw std::runtime_error("canonical_coordinates: fold produced no chamber point");
  const auto best = *std::min_element(reps.begin(), reps.end());
  return WeylPoint{best[0], best[1], best[2]};
}

WeylPoint base_mirror(const WeylPoint& p) {
  if (std::abs(p.c) > 1e-12) {
    throw std::invalid_argument("base_mirror: defined only on the c = 0 base");
  }
  return WeylPoint{kPi - p.a, p.b, 0.0};
}

LocalInvariants local_invariants(const Unitary& u) {
  static const Mat kMagic = magic_basis();
  const Mat m = kMagic.adjoint() * special_form(u) * kMagic;
  const Mat g = m.transpose() * m;
  const Complex tr = g.trace();
  const Complex g1 = tr * tr / 16.0;
  const Complex g2 = (tr * tr - (g * g).trace()) / 4.0;
  return LocalInvariants{g1.real(), g1.imag(), g2.real()};
}

bool locally_equivalent(const Unitary& u, const Unitary& v) {
  const WeylPoint pu = canonical_coordinates(u);
  const WeylPoint pv = canonical_coordinates(v);
  return std::abs(pu.a - pv.a) <= 1e-8 && std::abs(pu.b - pv.b) <= 1e-8 &&
         std::abs(pu.c - pv.c) <= 1e-8;
}

bool reachable_two(double gamma, const WeylPoint& p) {
  require_gamma(gamma);
  constexpr double kSlack = 1e-9;
  if (std::abs(p.c) > kSlack) return false;
  return p.a + p.b <= 2.0 * gamma + kSlack || p.a - p.b >= kPi - 2.0 * gamma - kSlack;
}

bool reachable_n(double gamma, int n, const WeylPoint& p) {
  require_gamma(gamma);
  if (n < 3) throw std::invalid_argument("reachable_n: n must be >= 3 (use reachable_two)");
  constexpr double kSlack = 1e-9;
  const double ng = static_cast<double>(n) * gamma;
  return p.a + p.b + p.c <= ng + kSlack || p.a - p.b - p.c >= kPi - ng - kSlack;
}

std::optional<std::string> classify_named_point(const WeylPoint& p) {
  struct Named {
    const char* name;
    double a, b, c;
  };
  static const Named kNamed[] = {
      {"O", 0.0, 0.0, 0.0},
      {"L", kPi / 2.0, 0.0, 0.0},
      {"A2", kPi / 2.0, kPi / 2.0, 0.0},
      {"A3", kPi / 2.0, kPi / 2.0, kPi / 2.0},
      {"B3", kPi / 4.0, kPi / 4.0, kPi / 4.0},
      {"B", kPi / 4.0, kPi / 4.0, 0.0},
      {"C1", kPi / 4.0, 0.0, 0.0},
  };
  for (const auto& n : kNamed) {
    if (std::abs(p.a - n.a) <= 1e-8 && std::abs(p.b - n.b) <= 1e-8 &&
        std::abs(p.c - n.c) <= 1e-8) {
      return std::string(n.name);
    }
  }
  return std::nullopt;
}

Unitary canonical_gate(const WeylPoint& p) {
  // XX, YY, ZZ commute, so the exponential factors exactly.
  const Mat xx = de_power(PauliLabel::X, PauliLabel::X, p.a / kPi).mat();
  const Mat yy = de_power(PauliLabel::Y, PauliLabel::Y, p.b / kPi).mat();
  const Mat zz = de_power(PauliLabel::Z, PauliLabel::Z, p.c / kPi).mat();
  return Unitary(xx * yy * zz);
}

}  // namespace cvpulse
