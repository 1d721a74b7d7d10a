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

// Release gate: runs every acceptance criterion and prints one line per
// criterion. Exits nonzero if any line fails.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "cvpulse/circuit.hpp"
#include "cvpulse/config.hpp"
#include "cvpulse/crmodel.hpp"
#include "cvpulse/gates.hpp"
#include "cvpulse/linalg.hpp"
#include "cvpulse/rng.hpp"
#include "cvpulse/synth.hpp"
#include "cvpulse/tomo.hpp"
#include "cvpulse/weyl.hpp"

namespace {

using cvpulse::Circuit;
using cvpulse::Complex;
using cvpulse::CountVector;
using cvpulse::DensityMatrix;
using cvpulse::GateName;
using cvpulse::Mat;
using cvpulse::NamedCircuit;
using cvpulse::PauliLabel;
using cvpulse::Unitary;
using cvpulse::Vec;
using cvpulse::WeylPoint;

const double kPi = 3.14159265358979323846;

int g_failures = 0;

void report(int idx, const char* name, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", idx, name,
              detail.c_str());
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

Unitary gate(GateName g) { return cvpulse::named_gate(g); }

Unitary random_local(cvpulse::Rng& rng) {
  Mat l = cvpulse::kron(cvpulse::u3(rng.uniform(0, kPi),
                                    rng.uniform(-kPi, kPi),
                                    rng.uniform(-kPi, kPi))
                            .mat(),
                        cvpulse::u3(rng.uniform(0, kPi),
                                    rng.uniform(-kPi, kPi),
                                    rng.uniform(-kPi, kPi))
                            .mat());
  return Unitary(l);
}

// ---- criterion 1: algebraic identities ------------------------------------

void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;

  Mat cv = gate(GateName::CV).mat();
  Mat cx = gate(GateName::CX).mat();
  worst = std::max(worst, (cv * cv - cx).cwiseAbs().maxCoeff());

  Mat prod_cx = cvpulse::de_power(PauliLabel::Z, PauliLabel::I, 0.5).mat() *
                cvpulse::de_power(PauliLabel::Z, PauliLabel::X, -0.5).mat() *
                cvpulse::de_power(PauliLabel::I, PauliLabel::X, 0.5).mat();
  worst = std::max(worst,
                   cvpulse::phase_distance(Unitary(prod_cx), Unitary(cx)));

  Mat prod_cv = cvpulse::de_power(PauliLabel::Z, PauliLabel::I, 0.25).mat() *
                cvpulse::de_power(PauliLabel::Z, PauliLabel::X, -0.25).mat() *
                cvpulse::de_power(PauliLabel::I, PauliLabel::X, 0.25).mat();
  worst = std::max(worst,
                   cvpulse::phase_distance(Unitary(prod_cv), Unitary(cv)));

  Mat sqsw = gate(GateName::SQSWAP).mat();
  worst = std::max(
      worst, (sqsw * sqsw - gate(GateName::SWAP).mat()).cwiseAbs().maxCoeff());
  Mat sqisw = gate(GateName::SQiSWAP).mat();
  worst = std::max(
      worst,
      (sqisw * sqisw - gate(GateName::iSWAP).mat()).cwiseAbs().maxCoeff());

  const double el = seconds_since(t0);
  const bool ok = worst <= 1e-10 && el < 1.0;
  report(1, "algebraic identities", ok,
         fmt("max deviation %.2e, %.3f s", worst, el));
}

// ---- criterion 2: trial-gate fidelity curves -------------------------------

void criterion_2() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;

  auto closed_form = [](double theta, double ideal) {
    const double d = theta - ideal;
    const double c = std::cos(kPi * d / 2.0);
    return c * c;
  };

  std::vector<double> grid_cv, grid_cx;
  for (int i = 0; i < 500; ++i) {
    grid_cv.push_back(2.0 * 98.0 * i / 499.0);
    grid_cx.push_back(2.0 * 196.0 * i / 499.0);
  }
  auto cv_pts = cvpulse::fidelity_sweep(cvpulse::TrialKind::CV, 98.0, grid_cv);
  for (const auto& p : cv_pts) {
    const double f = closed_form(-p.tau_d_ns / (4.0 * 98.0), -0.25);
    worst = std::max(worst, std::abs(p.fidelity - f));
  }
  auto cx_pts =
      cvpulse::fidelity_sweep(cvpulse::TrialKind::CX, 196.0, grid_cx);
  for (const auto& p : cx_pts) {
    const double f = closed_form(-p.tau_d_ns / (2.0 * 196.0), -0.5);
    worst = std::max(worst, std::abs(p.fidelity - f));
  }

  const double f_peak =
      cvpulse::fidelity_sweep(cvpulse::TrialKind::CV, 98.0, {98.0})[0].fidelity;
  const double f0_cv = cv_pts.front().fidelity;
  const double f0_cx = cx_pts.front().fidelity;
  const double cos2 = std::pow(std::cos(kPi / 8.0), 2);

  const double el = seconds_since(t0);
  const bool ok = worst <= 1e-10 && std::abs(f_peak - 1.0) <= 1e-10 &&
                  std::abs(f0_cv - cos2) <= 1e-10 &&
                  std::abs(f0_cx - 0.5) <= 1e-10 && el < 1.0;
  report(2, "fidelity sweep curves", ok,
         fmt("max closed-form gap %.2e, F(0) %.6f/%.3f, peak %.12f, %.3f s",
             worst, f0_cv, f0_cx, f_peak, el));
}

// ---- criterion 3: canonical coordinates of the named points ----------------

void criterion_3() {
  double worst = 0.0;
  auto check = [&worst](const Unitary& u, double a, double b, double c) {
    WeylPoint p = cvpulse::canonical_coordinates(u);
    worst = std::max({worst, std::abs(p.a - a), std::abs(p.b - b),
                      std::abs(p.c - c)});
  };
  check(gate(GateName::CX), kPi / 2, 0, 0);
  check(gate(GateName::CV), kPi / 4, 0, 0);
  check(gate(GateName::iSWAP), kPi / 2, kPi / 2, 0);
  check(gate(GateName::SWAP), kPi / 2, kPi / 2, kPi / 2);
  check(gate(GateName::SQSWAP), kPi / 4, kPi / 4, kPi / 4);
  check(gate(GateName::SQiSWAP), kPi / 4, kPi / 4, 0);

  // Invariance of the coordinates under local dressing.
  cvpulse::Rng rng(314159);
  const GateName refs[] = {GateName::CX,     GateName::CV,   GateName::iSWAP,
                           GateName::SWAP,   GateName::SQSWAP,
                           GateName::SQiSWAP};
  double worst_dress = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Unitary base = gate(refs[i % 6]);
    WeylPoint ref = cvpulse::canonical_coordinates(base);
    Unitary dressed(
        Mat(random_local(rng).mat() * base.mat() * random_local(rng).mat()));
    WeylPoint p = cvpulse::canonical_coordinates(dressed);
    worst_dress =
        std::max({worst_dress, std::abs(p.a - ref.a), std::abs(p.b - ref.b),
                  std::abs(p.c - ref.c)});
  }

  const bool ok = worst <= 1e-9 && worst_dress <= 1e-8;
  report(3, "canonical coordinates", ok,
         fmt("named-point gap %.2e, dressing gap %.2e over 1000 trials", worst,
             worst_dress));
}

// ---- criterion 4: reachability predicates ----------------------------------

void criterion_4() {
  const double half = kPi / 4;  // canonical angle of the half-power gate
  const double full = kPi / 2;  // canonical angle of the full-power gate
  bool ok = true;
  std::string bad;

  auto expect = [&](bool got, bool want, const char* what) {
    if (got != want) {
      ok = false;
      bad += std::string(bad.empty() ? "" : ", ") + what;
    }
  };

  expect(cvpulse::reachable_two(half, WeylPoint{kPi / 4, kPi / 4, 0}), true,
         "sqrt(iSWAP) with 2 half-power");
  expect(cvpulse::reachable_two(half, WeylPoint{kPi / 2, kPi / 2, 0}), false,
         "iSWAP with 2 half-power");
  WeylPoint dcx = cvpulse::canonical_coordinates(gate(GateName::DCX));
  expect(cvpulse::reachable_two(half, dcx), false, "DCX with 2 half-power");

  bool all_cu = true;
  for (int i = 0; i <= 200; ++i) {
    const double gprime = kPi * i / 200.0;
    all_cu = all_cu && cvpulse::reachable_two(half, WeylPoint{gprime, 0, 0});
  }
  expect(all_cu, true, "controlled-U family with 2 half-power");

  expect(cvpulse::reachable_n(half, 3, WeylPoint{kPi / 4, kPi / 4, kPi / 4}),
         true, "sqrt(SWAP) with 3 half-power");
  expect(cvpulse::reachable_n(half, 3, WeylPoint{kPi / 2, kPi / 2, kPi / 2}),
         false, "SWAP with 3 half-power");

  cvpulse::Rng rng(2718);
  bool all_full3 = true;
  for (int i = 0; i < 500; ++i) {
    double a = rng.uniform(0, kPi / 2);
    double b = rng.uniform(0, a);
    double c = rng.uniform(0, b);
    all_full3 = all_full3 && cvpulse::reachable_n(full, 3, WeylPoint{a, b, c});
  }
  expect(all_full3, true, "whole chamber with 3 full-power");

  bool all_full2 = true;
  for (int i = 0; i < 500; ++i) {
    double a = rng.uniform(0, kPi);
    double b = rng.uniform(0, kPi / 2);
    if (b > std::min(a, kPi - a)) {
      --i;
      continue;
    }
    all_full2 = all_full2 && cvpulse::reachable_two(full, WeylPoint{a, b, 0});
  }
  expect(all_full2, true, "whole base triangle with 2 full-power");

  report(4, "reachability predicates", ok,
         ok ? "all boolean expectations hold" : ("wrong: " + bad));
}

// ---- criterion 5: synthesis cross-validation -------------------------------

void criterion_5() {
  const auto t0 = std::chrono::steady_clock::now();

  auto sample_base = [](int count, std::uint64_t seed, bool want_reachable) {
    cvpulse::Rng rng(seed);
    std::vector<WeylPoint> out;
    while (static_cast<int>(out.size()) < count) {
      const double a = rng.uniform(0.0, kPi);
      const double b = rng.uniform(0.0, kPi / 2);
      if (b > std::min(a, kPi - a)) continue;
      const bool in_lobe1 = a + b <= kPi / 2 - 0.05;
      const bool in_lobe2 = a - b >= kPi / 2 + 0.05;
      const bool out_both =
          (a + b >= kPi / 2 + 0.15) && (a - b <= kPi / 2 - 0.15);
      if (want_reachable && (in_lobe1 || in_lobe2)) out.push_back({a, b, 0});
      if (!want_reachable && out_both) out.push_back({a, b, 0});
    }
    return out;
  };

  cvpulse::SynthesisProblem prob;
  prob.basis = gate(GateName::CV).mat();
  prob.k = 2;
  prob.restarts = 16;
  prob.tol = 1e-6;
  prob.max_sweeps = 3000;
  prob.jobs = 4;

  int conv_reach = 0;
  double worst_reach = 1.0;
  auto reach = sample_base(50, 2024, true);
  for (std::size_t i = 0; i < reach.size(); ++i) {
    prob.target = cvpulse::canonical_gate(reach[i]).mat();
    prob.seed = 1000 + i;
    auto r = cvpulse::synthesize(prob);
    if (r.converged) ++conv_reach;
    worst_reach = std::min(worst_reach, r.achieved_fidelity);
  }

  int conv_unreach = 0;
  double best_unreach = 0.0;
  auto unreach = sample_base(20, 4048, false);
  for (std::size_t i = 0; i < unreach.size(); ++i) {
    prob.target = cvpulse::canonical_gate(unreach[i]).mat();
    prob.seed = 5000 + i;
    auto r = cvpulse::synthesize(prob);
    if (r.converged) ++conv_unreach;
    best_unreach = std::max(best_unreach, r.achieved_fidelity);
  }

  const double el = seconds_since(t0);
  const bool ok =
      conv_reach == 50 && conv_unreach == 0 && el < 60.0;
  report(5, "synthesis cross-validation", ok,
         fmt("reachable 50/%d converged (worst F %.9f), unreachable %d/20 "
             "converged (best F %.6f), %.1f s",
             conv_reach, worst_reach, conv_unreach, best_unreach, el));
}

// ---- criterion 6: compiled circuits match their targets ---------------------

void criterion_6() {
  const NamedCircuit all[] = {
      NamedCircuit::QASM_CV,   NamedCircuit::SQISWAP_CX,
      NamedCircuit::SQISWAP_CV, NamedCircuit::SQSWAP_CX,
      NamedCircuit::SQSWAP_CV, NamedCircuit::TOF_CX, NamedCircuit::TOF_CV};
  bool ok = true;
  std::string bad;
  for (NamedCircuit id : all) {
    Circuit c = cvpulse::build_named(id);
    if (!cvpulse::equiv_up_to_phase(c, cvpulse::named_circuit_target(id),
                                    1e-9)) {
      ok = false;
      bad += std::string(bad.empty() ? "" : ", ") + cvpulse::to_string(id);
    }
  }
  report(6, "compiled circuit verification", ok,
         ok ? "7/7 match up to phase at 1e-9; endianness fallback: none"
            : ("mismatch: " + bad));
}

// ---- criterion 7: gate-time arithmetic --------------------------------------

void criterion_7(const cvpulse::DeviceConfigFile& cfg) {
  bool ok = true;
  std::string bad;
  auto expect = [&](bool cond, const char* what) {
    if (!cond) {
      ok = false;
      bad += std::string(bad.empty() ? "" : ", ") + what;
    }
  };

  const double cx_total = cvpulse::total_time(cvpulse::build_two_qubit_schedule(
      cvpulse::ScheduleKind::CX, cfg.timing, cfg.default_pair));
  expect(std::abs(cx_total - 462.0) <= 3.0, "full-power schedule total");

  auto place2 = [&](NamedCircuit id) {
    return cvpulse::remap_qubits(
        cvpulse::build_named(id),
        {cfg.default_pair.first, cfg.default_pair.second});
  };
  const double qasm_cv =
      cvpulse::circuit_gate_time(place2(NamedCircuit::QASM_CV), cfg.timing);
  expect(std::abs(qasm_cv - 994.0) <= 3.0, "two-CX composite total");

  const double cv_total = cvpulse::total_time(cvpulse::build_two_qubit_schedule(
      cvpulse::ScheduleKind::CV, cfg.timing, cfg.default_pair));
  expect(cv_total < 0.5 * qasm_cv, "half-power beats half the composite");

  const double measured = cfg.measured.pulse_cv_total_ns.value_or(cv_total);
  const double reduction = 100.0 * (qasm_cv - measured) / qasm_cv;
  expect(std::abs(reduction - 65.5) <= 2.0, "gate-time reduction percentage");

  auto place3 = [&](NamedCircuit id) {
    return cvpulse::remap_qubits(cvpulse::build_named(id),
                                 cfg.three_qubit_layout);
  };
  const double tof_cv =
      cvpulse::circuit_gate_time(place3(NamedCircuit::TOF_CV), cfg.timing);
  const double tof_cx =
      cvpulse::circuit_gate_time(place3(NamedCircuit::TOF_CX), cfg.timing);
  expect(tof_cv < tof_cx, "three-qubit ordering");
  expect(std::abs(tof_cv - 1778.0) <= 0.15 * 1778.0, "three-qubit CV total");
  expect(std::abs(tof_cx - 2835.0) <= 0.15 * 2835.0, "three-qubit CX total");

  report(7, "gate-time arithmetic", ok,
         ok ? fmt("CX %.1f ns, composite %.1f ns, CV %.1f ns, reduction "
                  "%.1f%%, Toffoli %.0f/%.0f ns",
                  cx_total, qasm_cv, cv_total, reduction, tof_cv, tof_cx)
            : ("wrong: " + bad));
}

// ---- criterion 8: tomography pipeline ---------------------------------------

Mat frame_rotation(const std::vector<PauliLabel>& basis) {
  Mat h = gate(GateName::H).mat();
  Mat sdg(2, 2);
  sdg << 1, 0, 0, Complex(0, -1);
  Mat r = Mat::Identity(1, 1);
  for (PauliLabel p : basis) {
    Mat one = Mat::Identity(2, 2);
    if (p == PauliLabel::X) one = h;
    if (p == PauliLabel::Y) one = h * sdg;
    r = cvpulse::kron(r, one);
  }
  return r;
}

CountVector exact_counts(const DensityMatrix& state,
                         const std::vector<PauliLabel>& basis,
                         std::int64_t shots) {
  Mat r = frame_rotation(basis);
  Mat rho = r * state.mat() * r.adjoint();
  CountVector cv;
  cv.shots = shots;
  const int n = static_cast<int>(basis.size());
  for (Eigen::Index i = 0; i < rho.rows(); ++i) {
    const double p = std::max(0.0, rho(i, i).real());
    if (p <= 0.0) continue;
    std::string key;
    for (int q = n - 1; q >= 0; --q) key += ((i >> q) & 1) ? '1' : '0';
    cv.counts[key] = p * static_cast<double>(shots);
  }
  return cv;
}

std::vector<std::vector<PauliLabel>> all_bases(int n) {
  std::vector<std::vector<PauliLabel>> out;
  const PauliLabel axes[] = {PauliLabel::X, PauliLabel::Y, PauliLabel::Z};
  std::vector<int> idx(n, 0);
  while (true) {
    std::vector<PauliLabel> b;
    for (int i : idx) b.push_back(axes[i]);
    out.push_back(b);
    int k = n - 1;
    while (k >= 0 && ++idx[k] == 3) idx[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

std::string basis_key(const std::vector<PauliLabel>& b) {
  std::string s;
  for (PauliLabel p : b) {
    s += (p == PauliLabel::X) ? 'X' : (p == PauliLabel::Y) ? 'Y' : 'Z';
  }
  return s;
}

void criterion_8(const cvpulse::DeviceConfigFile& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  Mat tof = gate(GateName::Toffoli).mat();
  const auto bases = all_bases(3);

  // Exact statistics reproduce the state to numerical precision.
  auto states = cvpulse::tomo_input_states();
  Vec psi0 = tof * states[10].second;  // a superposition input
  DensityMatrix truth0 = cvpulse::pure_state(psi0);
  std::map<std::string, CountVector> noiseless;
  for (const auto& b : bases) noiseless[basis_key(b)] = exact_counts(truth0, b, 8192);
  DensityMatrix rec0 = cvpulse::linear_inversion_tomography(noiseless);
  const double exact_gap = (rec0.mat() - truth0.mat()).cwiseAbs().maxCoeff();

  // Shot-sampled reconstruction of the full input-state table.
  double worst_f = 1.0;
  std::uint64_t seed = 77;
  for (const auto& [name, psi] : states) {
    DensityMatrix truth = cvpulse::pure_state(Vec(tof * psi));
    std::map<std::string, CountVector> data;
    for (const auto& b : bases) {
      data[basis_key(b)] = cvpulse::simulate_counts(truth, b, 8192, seed++);
    }
    DensityMatrix rec = cvpulse::linear_inversion_tomography(data);
    worst_f = std::min(worst_f, cvpulse::state_fidelity(rec, truth));
  }

  // Confusion-model round trip on the device's three measured qubits.
  cvpulse::ConfusionMatrix cm = cvpulse::confusion_for_qubits(cfg, {0, 1, 4});
  CountVector clean = exact_counts(truth0, bases.back(), 8192);  // ZZZ frame
  CountVector noisy;
  noisy.shots = clean.shots;
  for (const auto& [key, val] : clean.counts) {
    for (int j = 0; j < 8; ++j) {
      std::string out;
      for (int q = 2; q >= 0; --q) out += ((j >> q) & 1) ? '1' : '0';
      double p = 1.0;
      for (int q = 0; q < 3; ++q) {
        p *= cm.per_qubit[q][out[q] - '0'][key[q] - '0'];
      }
      if (p > 0.0) noisy.counts[out] += p * val;
    }
  }
  CountVector fixed = cvpulse::mitigate_readout(noisy, cm);
  double mit_gap = 0.0;
  for (const auto& [key, val] : clean.counts) {
    auto it = fixed.counts.find(key);
    const double got = it == fixed.counts.end() ? 0.0 : it->second;
    mit_gap = std::max(mit_gap, std::abs(got - val) / 8192.0);
  }

  const double el = seconds_since(t0);
  const bool ok = exact_gap <= 1e-10 && worst_f >= 0.99 && mit_gap <= 1e-3 &&
                  el < 120.0;
  report(8, "tomography pipeline", ok,
         fmt("noiseless gap %.2e, worst sampled F %.4f over 12 states, "
             "mitigation gap %.2e, %.1f s",
             exact_gap, worst_f, mit_gap, el));
}

// ---- criterion 9: echo algebra ----------------------------------------------

void criterion_9() {
  cvpulse::CRCoefficients plus;
  plus.omega_ZX = 5.0e6;
  plus.omega_IX = 2.0e6;
  cvpulse::CRCoefficients minus;
  minus.omega_ZX = -5.0e6;
  minus.omega_IX = -2.0e6;
  const double t = 0.8e-7;
  const double cancel_gap = cvpulse::phase_distance(
      cvpulse::echo_composite(plus, minus, t),
      cvpulse::zx_unitary(2.0 * plus.omega_ZX * t / kPi));

  cvpulse::CRCoefficients zp;
  zp.omega_ZX = 8.0e6;
  zp.omega_ZZ = 8.0e5;
  cvpulse::CRCoefficients zm;
  zm.omega_ZX = -8.0e6;
  zm.omega_ZZ = 8.0e5;
  const double tz = kPi / (4.0 * 8.0e6);
  cvpulse::CRCoefficients ideal;
  ideal.omega_ZX = 1.6e7;
  const double f = cvpulse::process_fidelity(
      cvpulse::echo_composite(zp, zm, tz), cvpulse::evolve_cr(ideal, tz));

  const bool ok = cancel_gap <= 1e-10 && f < 1.0 &&
                  std::abs(f - 0.999142611777135) <= 1e-12;
  report(9, "echo cancellation and residual error", ok,
         fmt("cancellation gap %.2e, contaminated F %.15f", cancel_gap, f));
}

}  // namespace

int main() {
  const std::string path =
      std::string(CVPULSE_DATA_DIR) + "/ibmq_toronto_example.json";
  cvpulse::DeviceConfigFile cfg = cvpulse::load_device_config(path);

  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7(cfg);
  criterion_8(cfg);
  criterion_9();

  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all 9 criteria passed\n");
  return 0;
}
