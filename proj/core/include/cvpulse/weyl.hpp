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

#include <optional>
#include <string>

#include "cvpulse/linalg.hpp"

namespace cvpulse {

// Canonical coordinates of a two-qubit local-equivalence class.
// Chamber: a >= b >= c >= 0, a + b <= pi (base points may have a up to pi).
// Convention: (a, b, c) labels the class of k1 exp(-(i/2)(a XX + b YY +
// c ZZ)) k2, which places sqrt(SWAP) at [pi/4, pi/4, pi/4] and its adjoint
// at [3pi/4, pi/4, pi/4]. On the base (c = 0) the mirror [a,b,0] and
// [pi-a,b,0] name the same class; extraction returns the a <= pi/2 side.
struct WeylPoint {
  double a;
  double b;
  double c;
};

struct LocalInvariants {
  double g1_re;
  double g1_im;
  double g2;
};

// Unique chamber representative of u's class. Throws on non-unitary or
// wrong dimension.
WeylPoint canonical_coordinates(const Unitary& u);

// The base identification [a, b, 0] <-> [pi - a, b, 0]. Throws if c != 0.
WeylPoint base_mirror(const WeylPoint& p);

// Invariants of the magic-basis Gram spectrum: g1 = Tr(G)^2/16 (complex),
// g2 = (Tr(G)^2 - Tr(G^2))/4 (real), G = m^T m. Stable under the det^{1/4}
// branch ambiguity (G -> -G leaves both unchanged).
LocalInvariants local_invariants(const Unitary& u);

// True iff canonical coordinates agree within 1e-8.
bool locally_equivalent(const Unitary& u, const Unitary& v);

// Two applications of a base gate [gamma, 0, 0]: reachable iff c = 0 and
// (a + b <= 2*gamma or a - b >= pi - 2*gamma), union of the two mirror
// triangles, 1e-9 boundary slack. gamma must lie in (0, pi/2].
bool reachable_two(double gamma, const WeylPoint& p);

// n >= 3 applications: (a+b+c <= n*gamma or a-b-c >= pi - n*gamma), union
// of the two tetrahedra, 1e-9 slack. n < 3 is an error (use reachable_two).
bool reachable_n(double gamma, int n, const WeylPoint& p);

// Named chamber points within 1e-8: O, L, A2, A3, B3, B, C1.
std::optional<std::string> classify_named_point(const WeylPoint& p);

// exp(-(i/2)(a XX + b YY + c ZZ)): the class representative for p under the
// labeling convention above.
Unitary canonical_gate(const WeylPoint& p);

}  // namespace cvpulse
