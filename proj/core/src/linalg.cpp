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

#include "cvpulse/linalg.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <Eigen/Eigenvalues>

namespace cvpulse {

namespace {

void require_square(const Mat& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw std::invalid_argument(std::string(what) + ": matrix must be square and non-empty");
  }
  if (!m.allFinite()) {
    throw std::invalid_argument(std::string(what) + ": matrix has non-finite entries");
  }
}

}  // namespace

bool is_unitary(const Mat& m, double tol) {
  if (m.rows() == 0 || m.rows() != m.cols() || !m.allFinite()) return false;
  Mat d = m.adjoint() * m - Mat::Identity(m.rows(), m.cols());
  return d.cwiseAbs().maxCoeff() <= tol;
}

bool is_hermitian(const Mat& m, double tol) {
  if (m.rows() == 0 || m.rows() != m.cols() || !m.allFinite()) return false;
  Mat d = m - m.adjoint();
  return d.cwiseAbs().maxCoeff() <= tol;
}

Unitary::Unitary(Mat m) : m_(std::move(m)) {
  require_square(m_, "Unitary");
  if (!is_unitary(m_)) {
    throw std::invalid_argument("Unitary: U†U differs from I beyond 1e-10");
  }
}

HermitianOperator::HermitianOperator(Mat m) : m_(std::move(m)) {
  require_square(m_, "HermitianOperator");
  if (!is_hermitian(m_)) {
    throw std::invalid_argument("HermitianOperator: H differs from H† beyond 1e-12");
  }
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Unitary expm_hermitian(const HermitianOperator& h, double t) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h.mat());
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("expm_hermitian: eigendecomposition failed");
  }
  const auto& w = es.eigenvalues();
  const Mat& v = es.eigenvectors();
  Vec phases(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    phases(i) = std::exp(Complex(0.0, -t * w(i)));
  }
  return Unitary(v * phases.asDiagonal() * v.adjoint());
}

Mat sqrtm_psd(const Mat& m) {
  require_square(m, "sqrtm_psd");
  if (!is_hermitian(m, 1e-8)) {
    throw std::invalid_argument("sqrtm_psd: input not Hermitian within 1e-8");
  }
  Mat sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(sym);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("sqrtm_psd: eigendecomposition failed");
  }
  Eigen::VectorXd w = es.eigenvalues();
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w(i) < -1e-6) throw std::invalid_argument("sqrtm_psd: not PSD");
    if (w(i) < 0.0) w(i) = 0.0;
  }
  Vec roots(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) roots(i) = std::sqrt(w(i));
  const Mat& v = es.eigenvectors();
  return v * roots.asDiagonal() * v.adjoint();
}

PhaseDistanceResult phase_distance_full(const Unitary& u, const Unitary& v) {
  if (u.dim() != v.dim()) {
    throw std::invalid_argument("phase_distance: dimension mismatch");
  }
  Complex tr = (u.mat().adjoint() * v.mat()).trace();
  PhaseDistanceResult r{};
  if (std::abs(tr) < 1e-14) {
    r.degenerate = true;
    r.alpha = 0.0;
    r.distance = (u.mat() - v.mat()).cwiseAbs().maxCoeff();
    return r;
  }
  r.degenerate = false;
  r.alpha = -std::arg(tr);
  Mat d = u.mat() - std::exp(Complex(0.0, r.alpha)) * v.mat();
  r.distance = d.cwiseAbs().maxCoeff();
  return r;
}

double phase_distance(const Unitary& u, const Unitary& v) {
  return phase_distance_full(u, v).distance;
}

namespace {

Complex parse_entry(const std::string& tok) {
  // "re+imj" with a mandatory trailing j; the split sign is the last +/-
  // that is not an exponent sign and not the leading sign.
  std::string s;
  for (char c : tok) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty() || s.back() != 'j') {
    throw std::invalid_argument("matrix parse: entry '" + tok + "' lacks trailing j");
  }
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    char c = s[i];
    if ((c == '+' || c == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) {
    throw std::invalid_argument("matrix parse: entry '" + tok + "' lacks real+imag form");
  }
  std::size_t used = 0;
  double re = std::stod(s.substr(0, split), &used);
  if (used != split) throw std::invalid_argument("matrix parse: bad real part in '" + tok + "'");
  std::string ims = s.substr(split);
  if (ims == "+") ims = "1";
  else if (ims == "-") ims = "-1";
  double im = std::stod(ims, &used);
  if (used != ims.size()) throw std::invalid_argument("matrix parse: bad imag part in '" + tok + "'");
  return Complex(re, im);
}

}  // namespace

Mat parse_matrix_text(const std::string& text) {
  std::vector<std::vector<Complex>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    bool blank = true;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) { blank = false; break; }
    }
    if (blank) continue;
    std::vector<Complex> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(parse_entry(cell));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("matrix parse: no rows");
  const std::size_t n = rows.size();
  for (const auto& r : rows) {
    if (r.size() != n) throw std::invalid_argument("matrix parse: not square");
  }
  Mat m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  }
  return m;
}

std::string format_matrix_text(const Mat& m) {
  std::string out;
  char buf[96];
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g%+.17gj", m(i, j).real(), m(i, j).imag());
      out += buf;
      if (j + 1 < m.cols()) out += ',';
    }
    out += '\n';
  }
  return out;
}

}  // namespace cvpulse
