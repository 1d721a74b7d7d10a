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

#include <complex>
#include <string>

#include <Eigen/Dense>

namespace cvpulse {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Tolerance ladder: unitarity at 1e-10, hermiticity at 1e-12; downstream
// tolerances are stated per operation.
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kHermitianTol = 1e-12;

bool is_unitary(const Mat& m, double tol = kUnitaryTol);
bool is_hermitian(const Mat& m, double tol = kHermitianTol);

// Dense complex square matrix with U†U = I within 1e-10 entrywise.
class Unitary {
 public:
  explicit Unitary(Mat m);  // throws std::invalid_argument if not unitary
  const Mat& mat() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  Mat m_;
};

// Dense complex square matrix with H = H† within 1e-12 entrywise.
class HermitianOperator {
 public:
  explicit HermitianOperator(Mat m);  // throws if not Hermitian
  const Mat& mat() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  Mat m_;
};

// Tensor product; left factor is most significant.
Mat kron(const Mat& a, const Mat& b);

// exp(-i*t*H) via eigendecomposition; unitary by construction.
Unitary expm_hermitian(const HermitianOperator& h, double t);

// Hermitian PSD square root. Eigenvalues in [-1e-8, 0) are clamped to 0;
// an eigenvalue below -1e-6 is an error ("not PSD").
Mat sqrtm_psd(const Mat& m);

struct PhaseDistanceResult {
  double distance;  // max-entry |u - e^{i alpha} v| at the aligning phase
  double alpha;     // phase maximizing Re(e^{i alpha} Tr(u†v)), 0 if degenerate
  bool degenerate;  // Tr(u†v) = 0: phase undetermined, distance at alpha = 0
};

PhaseDistanceResult phase_distance_full(const Unitary& u, const Unitary& v);
double phase_distance(const Unitary& u, const Unitary& v);

// Matrix text format: one row per line, entries "re+imj" separated by
// commas; optional whitespace around entries is accepted.
Mat parse_matrix_text(const std::string& text);
std::string format_matrix_text(const Mat& m);

}  // namespace cvpulse
