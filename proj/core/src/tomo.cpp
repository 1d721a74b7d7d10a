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

#include "cvpulse/tomo.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "cvpulse/rng.hpp"

namespace cvpulse {

namespace {

int qubits_of_dim(Eigen::Index dim, const char* what) {
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if ((Eigen::Index{1} << n) != dim) {
    throw std::invalid_argument(std::string(what) + ": dimension not a power of two");
  }
  return n;
}

Mat basis_rotation(PauliLabel p) {
  const Complex i(0.0, 1.0);
  Mat h(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  h << r, r, r, -r;
  switch (p) {
    case PauliLabel::X:
      return h;
    case PauliLabel::Y: {
      Mat sdg = Mat::Identity(2, 2);
      sdg(1, 1) = -i;
      return h * sdg;
    }
    case PauliLabel::I:
    case PauliLabel::Z:
      return Mat::Identity(2, 2);
  }
  throw std::logic_error("basis_rotation: invalid label");
}

std::string index_bits(Eigen::Index idx, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int k = 0; k < n; ++k) {
    if (idx & (Eigen::Index{1} << (n - 1 - k))) s[static_cast<std::size_t>(k)] = '1';
  }
  return s;
}

}  // namespace

DensityMatrix::DensityMatrix(Mat m) : m_(std::move(m)) {
  if (m_.rows() == 0 || m_.rows() != m_.cols() || !m_.allFinite()) {
    throw std::invalid_argument("DensityMatrix: matrix must be square and finite");
  }
  if (!is_hermitian(m_, 1e-10)) {
    throw std::invalid_argument("DensityMatrix: not Hermitian within 1e-10");
  }
  if (std::abs(m_.trace() - Complex(1.0, 0.0)) > 1e-10) {
    throw std::invalid_argument("DensityMatrix: trace differs from 1 beyond 1e-10");
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(m_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-8) {
    throw std::invalid_argument("DensityMatrix: negative eigenvalue beyond -1e-8");
  }
}

DensityMatrix pure_state(const Vec& psi) {
  if (psi.size() == 0) throw std::invalid_argument("pure_state: empty vector");
  if (std::abs(psi.norm() - 1.0) > 1e-10) {
    throw std::invalid_argument("pure_state: vector not normalized within 1e-10");
  }
  return DensityMatrix(psi * psi.adjoint());
}

double state_fidelity(const DensityMatrix& rho_exp, const DensityMatrix& rho_ide) {
  if (rho_exp.dim() != rho_ide.dim()) {
    throw std::invalid_argument("state_fidelity: dimension mismatch");
  }
  const Mat s = sqrtm_psd(rho_exp.mat());
  const Mat inner = sqrtm_psd(s * rho_ide.mat() * s);
  const double tr = inner.trace().real();
  return tr * tr;
}

CountVector simulate_counts(const DensityMatrix& state,
                            const std::vector<PauliLabel>& basis,
                            std::int64_t shots, std::uint64_t seed) {
  const int n = qubits_of_dim(state.dim(), "simulate_counts");
  if (static_cast<int>(basis.size()) != n) {
    throw std::invalid_argument("simulate_counts: basis length must equal qubit count");
  }
  if (shots <= 0) throw std::invalid_argument("simulate_counts: shots must be positive");

  Mat rot = Mat::Identity(1, 1);
  for (int k = 0; k < n; ++k) rot = kron(rot, basis_rotation(basis[static_cast<std::size_t>(k)]));
  const Mat rotated = rot * state.mat() * rot.adjoint();

  const Eigen::Index dim = state.dim();
  std::vector<double> probs(static_cast<std::size_t>(dim));
  double total = 0.0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    double p = rotated(i, i).real();
    if (p < 0.0) p = 0.0;  // clip eigensolver noise
    probs[static_cast<std::size_t>(i)] = p;
    total += p;
  }
  if (total <= 0.0) throw std::runtime_error("simulate_counts: degenerate distribution");
  std::vector<double> cdf(probs.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i] / total;
    cdf[i] = acc;
  }
  cdf.back() = 1.0;

  Rng rng(seed);
  std::vector<std::int64_t> hits(probs.size(), 0);
  for (std::int64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform();
    const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
    ++hits[static_cast<std::size_t>(it - cdf.begin())];
  }

  CountVector out;
  out.shots = shots;
  for (Eigen::Index i = 0; i < dim; ++i) {
    const std::int64_t h = hits[static_cast<std::size_t>(i)];
    if (h > 0) out.counts[index_bits(i, n)] = static_cast<double>(h);
  }
  return out;
}

DensityMatrix linear_inversion_tomography(
    const std::map<std::string, CountVector>& counts_by_basis) {
  if (counts_by_basis.empty()) {
    throw std::invalid_argument("tomography: no measurement bases");
  }
  const int n = static_cast<int>(counts_by_basis.begin()->first.size());
  if (n < 1 || n > 6) throw std::invalid_argument("tomography: qubit count must be in 1..6");
  std::size_t expect = 1;
  for (int k = 0; k < n; ++k) expect *= 3;
  if (counts_by_basis.size() != expect) {
    throw std::invalid_argument("tomography: need all 3^n measurement bases");
  }
  for (const auto& [key, cv] : counts_by_basis) {
    if (key.size() != static_cast<std::size_t>(n)) {
      throw std::invalid_argument("tomography: inconsistent basis key length");
    }
    for (char ch : key) {
      if (ch != 'X' && ch != 'Y' && ch != 'Z') {
        throw std::invalid_argument("tomography: basis keys must use X, Y, Z");
      }
    }
    if (cv.shots <= 0) throw std::invalid_argument("tomography: shots must be positive");
    for (const auto& [bits, cnt] : cv.counts) {
      if (bits.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("tomography: bitstring length mismatch");
      }
      if (cnt < 0.0) throw std::invalid_argument("tomography: negative count");
    }
  }

  const Eigen::Index dim = Eigen::Index{1} << n;
  const std::size_t num_paulis = std::size_t{1} << (2 * n);

  Mat rho = Mat::Zero(dim, dim);
  for (std::size_t pidx = 0; pidx < num_paulis; ++pidx) {
    std::vector<int> codes(static_cast<std::size_t>(n));
    std::size_t rest = pidx;
    for (int k = n - 1; k >= 0; --k) {
      codes[static_cast<std::size_t>(k)] = static_cast<int>(rest & 3);
      rest >>= 2;
    }
    // <P> averaged over every basis whose letters cover P's support.
    double sum = 0.0;
    int used = 0;
    for (const auto& [key, cv] : counts_by_basis) {
      bool compatible = true;
      for (int k = 0; k < n && compatible; ++k) {
        const int code = codes[static_cast<std::size_t>(k)];
        if (code == 0) continue;
        const char want = code == 1 ? 'X' : code == 2 ? 'Y' : 'Z';
        if (key[static_cast<std::size_t>(k)] != want) compatible = false;
      }
      if (!compatible) continue;
      double ev = 0.0;
      for (const auto& [bits, cnt] : cv.counts) {
        int parity = 0;
        for (int k = 0; k < n; ++k) {
          if (codes[static_cast<std::size_t>(k)] != 0 && bits[static_cast<std::size_t>(k)] == '1') {
            parity ^= 1;
          }
        }
        ev += (parity ? -cnt : cnt);
      }
      sum += ev / static_cast<double>(cv.shots);
      ++used;
    }
    const double expectation = sum / static_cast<double>(used);
    Mat pmat = Mat::Identity(1, 1);
    for (int k = 0; k < n; ++k) {
      pmat = kron(pmat, pauli(pauli_from_code(codes[static_cast<std::size_t>(k)])));
    }
    rho += expectation * pmat;
  }
  rho /= static_cast<double>(dim);
  rho = 0.5 * (rho + rho.adjoint());

  // Raw inversion can leave small negative eigenvalues. Project the
  // spectrum onto the probability simplex: negatives are clipped to zero
  // and the surplus is removed from the surviving eigenvalues, which
  // restores unit trace without rescaling the dominant eigenvector's
  // weight by the whole clipped mass.
  Eigen::SelfAdjointEigenSolver<Mat> es(rho);
  Eigen::VectorXd w = es.eigenvalues();
  std::vector<double> desc(w.data(), w.data() + w.size());
  std::sort(desc.begin(), desc.end(), std::greater<double>());
  double cum = 0.0;
  double shift = 0.0;
  for (std::size_t j = 0; j < desc.size(); ++j) {
    cum += desc[j];
    const double t = (1.0 - cum) / static_cast<double>(j + 1);
    if (desc[j] + t > 0.0) shift = t;
  }
  for (Eigen::Index i = 0; i < w.size(); ++i) w(i) = std::max(w(i) + shift, 0.0);
  Vec diag(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) diag(i) = w(i);
  const Mat psd = es.eigenvectors() * diag.asDiagonal() * es.eigenvectors().adjoint();
  return DensityMatrix(0.5 * (psd + psd.adjoint()));
}

CountVector mitigate_readout(const CountVector& raw, const ConfusionMatrix& cm) {
  const int n = static_cast<int>(cm.per_qubit.size());
  if (n < 1 || n > 20) throw std::invalid_argument("mitigate_readout: bad qubit count");
  if (raw.shots <= 0) throw std::invalid_argument("mitigate_readout: shots must be positive");

  std::vector<std::array<std::array<double, 2>, 2>> inv(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const auto& m = cm.per_qubit[static_cast<std::size_t>(k)];
    const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (std::abs(det) < 1e-12) {
      throw std::invalid_argument("mitigate_readout: singular confusion matrix");
    }
    inv[static_cast<std::size_t>(k)] = {{{m[1][1] / det, -m[0][1] / det},
                                         {-m[1][0] / det, m[0][0] / det}}};
  }

  const std::size_t dim = std::size_t{1} << n;
  std::vector<double> vec(dim, 0.0);
  for (const auto& [bits, cnt] : raw.counts) {
    if (bits.size() != static_cast<std::size_t>(n)) {
      throw std::invalid_argument("mitigate_readout: bitstring length mismatch");
    }
    std::size_t idx = 0;
    for (char ch : bits) {
      if (ch != '0' && ch != '1') {
        throw std::invalid_argument("mitigate_readout: bitstring must be binary");
      }
      idx = (idx << 1) | static_cast<std::size_t>(ch == '1');
    }
    vec[idx] += cnt;
  }

  // Apply the inverse one qubit at a time (tensor contraction).
  for (int k = 0; k < n; ++k) {
    const auto& m = inv[static_cast<std::size_t>(k)];
    const std::size_t stride = std::size_t{1} << (n - 1 - k);
    std::vector<double> next(dim, 0.0);
    for (std::size_t idx = 0; idx < dim; ++idx) {
      const std::size_t bit = (idx / stride) & 1;
      const std::size_t base = idx - bit * stride;
      next[idx] = m[bit][0] * vec[base] + m[bit][1] * vec[base + stride];
    }
    vec.swap(next);
  }

  double pos = 0.0;
  for (double& v : vec) {
    if (v < 0.0) v = 0.0;
    pos += v;
  }
  if (pos <= 0.0) throw std::runtime_error("mitigate_readout: correction removed every count");
  const double scale = static_cast<double>(raw.shots) / pos;

  CountVector out;
  out.shots = raw.shots;
  for (std::size_t idx = 0; idx < dim; ++idx) {
    if (vec[idx] > 0.0) {
      out.counts[index_bits(static_cast<Eigen::Index>(idx), n)] = vec[idx] * scale;
    }
  }
  return out;
}

std::vector<std::pair<std::string, Vec>> tomo_input_states() {
  auto ket = [](char ch) {
    Vec v(2);
    const double r = 1.0 / std::sqrt(2.0);
    switch (ch) {
      case '0': v << 1, 0; break;
      case '1': v << 0, 1; break;
      case '+': v << r, r; break;
      case '-': v << r, -r; break;
      default: throw std::logic_error("tomo_input_states: bad label");
    }
    return v;
  };
  auto build = [&](const std::string& name) {
    Vec v = Vec::Ones(1);
    for (char ch : name) {
      const Vec q = ket(ch);
      Vec next(v.size() * 2);
      for (Eigen::Index i = 0; i < v.size(); ++i) {
        next(2 * i) = v(i) * q(0);
        next(2 * i + 1) = v(i) * q(1);
      }
      v = next;
    }
    return std::make_pair(name, v);
  };
  std::vector<std::pair<std::string, Vec>> out;
  for (const char* name : {"000", "001", "010", "011", "100", "101", "110", "111",
                           "+10", "1+0", "++1", "--1"}) {
    out.push_back(build(name));
  }
  return out;
}

}  // namespace cvpulse
