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

#include <cmath>
#include <complex>
#include <stdexcept>

#include <doctest.h>

#include "cvpulse/linalg.hpp"
#include "cvpulse/rng.hpp"

namespace {

using cvpulse::Complex;
using cvpulse::Mat;

const double kPi = 3.14159265358979323846;

Mat random_unitary(int n, std::uint64_t seed) {
  cvpulse::Rng rng(seed);
  Mat a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a(i, j) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    }
  }
  Eigen::HouseholderQR<Mat> qr(a);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    Complex d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

}  // namespace

TEST_CASE("unitary and hermitian predicates") {
  Mat h(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  h << r, r, r, -r;
  CHECK(cvpulse::is_unitary(h));
  CHECK(cvpulse::is_hermitian(h));

  Mat bad = Mat::Identity(2, 2);
  bad(0, 0) = 2.0;
  CHECK_FALSE(cvpulse::is_unitary(bad));
  CHECK(cvpulse::is_hermitian(bad));

  Mat skew(2, 2);
  skew << 0, Complex(0, 1), Complex(0, 1), 0;
  CHECK_FALSE(cvpulse::is_hermitian(skew));

  Mat nan_mat = Mat::Identity(2, 2);
  nan_mat(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_FALSE(cvpulse::is_unitary(nan_mat));
  CHECK_FALSE(cvpulse::is_hermitian(nan_mat));
}

TEST_CASE("validating wrappers reject bad input") {
  CHECK_NOTHROW(cvpulse::Unitary(Mat::Identity(4, 4)));
  CHECK_THROWS_AS(cvpulse::Unitary(2.0 * Mat::Identity(2, 2)),
                  std::invalid_argument);
  Mat rect(2, 3);
  rect.setZero();
  CHECK_THROWS_AS(cvpulse::Unitary{rect}, std::invalid_argument);

  CHECK_NOTHROW(cvpulse::HermitianOperator(Mat::Identity(2, 2)));
  Mat skew(2, 2);
  skew << 0, Complex(0, 1), Complex(0, 1), 0;
  CHECK_THROWS_AS(cvpulse::HermitianOperator{skew}, std::invalid_argument);
}

TEST_CASE("kron block structure") {
  Mat x(2, 2);
  x << 0, 1, 1, 0;
  Mat z(2, 2);
  z << 1, 0, 0, -1;
  Mat k = cvpulse::kron(z, x);
  CHECK(k.rows() == 4);
  CHECK(std::abs(k(0, 1) - Complex(1, 0)) < 1e-15);
  CHECK(std::abs(k(1, 0) - Complex(1, 0)) < 1e-15);
  CHECK(std::abs(k(2, 3) - Complex(-1, 0)) < 1e-15);
  CHECK(std::abs(k(3, 2) - Complex(-1, 0)) < 1e-15);
  CHECK(k.cwiseAbs().sum() == doctest::Approx(4.0));

  // (A kron B)(C kron D) = AC kron BD.
  Mat a = random_unitary(2, 11);
  Mat b = random_unitary(3, 12);
  Mat c = random_unitary(2, 13);
  Mat d = random_unitary(3, 14);
  Mat lhs = cvpulse::kron(a, b) * cvpulse::kron(c, d);
  Mat rhs = cvpulse::kron(a * c, b * d);
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("hermitian exponential basics") {
  Mat z(2, 2);
  z << 1, 0, 0, -1;
  cvpulse::HermitianOperator hz(z);

  auto u0 = cvpulse::expm_hermitian(hz, 0.0);
  CHECK((u0.mat() - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);

  const double t = 0.7;
  auto u = cvpulse::expm_hermitian(hz, t);
  CHECK(std::abs(u.mat()(0, 0) - std::exp(Complex(0, -t))) < 1e-14);
  CHECK(std::abs(u.mat()(1, 1) - std::exp(Complex(0, t))) < 1e-14);

  // Group property on a non-diagonal generator.
  Mat g(2, 2);
  g << 0.3, Complex(0.1, -0.4), Complex(0.1, 0.4), -1.2;
  cvpulse::HermitianOperator hg(g);
  Mat prod = cvpulse::expm_hermitian(hg, 0.25).mat() *
             cvpulse::expm_hermitian(hg, 0.5).mat();
  Mat whole = cvpulse::expm_hermitian(hg, 0.75).mat();
  CHECK((prod - whole).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("psd square root") {
  Mat u = random_unitary(3, 21);
  Eigen::VectorXd ev(3);
  ev << 0.0, 0.5, 2.0;
  Mat psd = u * ev.asDiagonal() * u.adjoint();
  Mat s = cvpulse::sqrtm_psd(psd);
  CHECK((s * s - psd).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(cvpulse::is_hermitian(s, 1e-10));

  Mat z(2, 2);
  z << 1, 0, 0, -1;
  CHECK_THROWS_AS(cvpulse::sqrtm_psd(z), std::invalid_argument);
  Mat skew(2, 2);
  skew << 0, Complex(0, 1), Complex(0, 1), 0;
  CHECK_THROWS_AS(cvpulse::sqrtm_psd(skew), std::invalid_argument);
}

TEST_CASE("phase distance alignment") {
  cvpulse::Unitary u(random_unitary(4, 31));
  const Complex ph = std::exp(Complex(0, 1.234));
  cvpulse::Unitary v(Mat(ph * u.mat()));

  auto full = cvpulse::phase_distance_full(u, v);
  CHECK_FALSE(full.degenerate);
  CHECK(full.distance < 1e-12);
  CHECK(cvpulse::phase_distance(u, v) < 1e-12);

  // Orthogonal pair: trace inner product vanishes, phase is undetermined.
  Mat z(2, 2);
  z << 1, 0, 0, -1;
  auto deg = cvpulse::phase_distance_full(cvpulse::Unitary(Mat::Identity(2, 2)),
                                          cvpulse::Unitary(z));
  CHECK(deg.degenerate);
  CHECK(deg.alpha == 0.0);
  CHECK(deg.distance == doctest::Approx(2.0));

  CHECK_THROWS_AS(
      cvpulse::phase_distance(cvpulse::Unitary(Mat::Identity(2, 2)),
                              cvpulse::Unitary(Mat::Identity(4, 4))),
      std::invalid_argument);
}

TEST_CASE("matrix text round trip") {
  Mat m = random_unitary(4, 41);
  std::string text = cvpulse::format_matrix_text(m);
  Mat back = cvpulse::parse_matrix_text(text);
  CHECK((m - back).cwiseAbs().maxCoeff() < 1e-15);
  // Formatting is reproducible byte for byte.
  CHECK(cvpulse::format_matrix_text(back) == text);
}

TEST_CASE("matrix text entry forms") {
  Mat m = cvpulse::parse_matrix_text("1+0j, 0-1j\n0+j, -1.5e-1-2j\n");
  CHECK(std::abs(m(0, 0) - Complex(1, 0)) < 1e-15);
  CHECK(std::abs(m(0, 1) - Complex(0, -1)) < 1e-15);
  CHECK(std::abs(m(1, 0) - Complex(0, 1)) < 1e-15);
  CHECK(std::abs(m(1, 1) - Complex(-0.15, -2)) < 1e-15);

  CHECK_THROWS_AS(cvpulse::parse_matrix_text("1+0j, 2\n3+0j, 4+0j\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(cvpulse::parse_matrix_text("1+0j\n2+0j, 3+0j\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(cvpulse::parse_matrix_text(""), std::invalid_argument);
  CHECK_THROWS_AS(cvpulse::parse_matrix_text("zz+0j\n"), std::invalid_argument);
}

TEST_CASE("rng stream derivation is stable") {
  // Derived streams are deterministic and distinct per index.
  const std::uint64_t a = cvpulse::Rng::derive_seed(0, 0);
  const std::uint64_t b = cvpulse::Rng::derive_seed(0, 1);
  CHECK(a != b);
  CHECK(a == cvpulse::Rng::derive_seed(0, 0));
  cvpulse::Rng r1(a), r2(a);
  for (int i = 0; i < 100; ++i) {
    const double x = r1.uniform();
    CHECK(x == r2.uniform());
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
  cvpulse::Rng r3(7);
  for (int i = 0; i < 100; ++i) {
    const double x = r3.uniform(-kPi, kPi);
    CHECK(x >= -kPi);
    CHECK(x <= kPi);
  }
}
