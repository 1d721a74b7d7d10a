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
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cvpulse/circuit.hpp"
#include "cvpulse/config.hpp"
#include "cvpulse/crmodel.hpp"
#include "cvpulse/gates.hpp"
#include "cvpulse/linalg.hpp"
#include "cvpulse/pulse.hpp"
#include "cvpulse/synth.hpp"
#include "cvpulse/weyl.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitVerifyFail = 2;
constexpr double kPi = std::numbers::pi;

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
  out << content;
}

// Named targets accepted by verify/synth/weyl. TOFFOLI_SWAPPED is
// SWAP(0,1) * Toffoli, the action of the control-swapped Toffoli circuit.
cvpulse::Unitary target_by_name(const std::string& name) {
  if (name == "TOFFOLI_SWAPPED") {
    return cvpulse::named_circuit_target(cvpulse::NamedCircuit::TOF_CV);
  }
  return cvpulse::named_gate(cvpulse::gate_from_string(name));
}

cvpulse::Unitary unitary_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return cvpulse::Unitary(cvpulse::parse_matrix_text(buf.str()));
}

cvpulse::Circuit circuit_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open circuit file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return cvpulse::parse_circuit_json(buf.str());
}

// Wires of a named circuit land on the config's physical qubits so that
// per-edge calibrations resolve.
cvpulse::Circuit place_on_device(const cvpulse::Circuit& c,
                                 const cvpulse::DeviceConfigFile& cfg) {
  if (c.num_qubits == 2) {
    return cvpulse::remap_qubits(c, {cfg.default_pair.first, cfg.default_pair.second});
  }
  if (c.num_qubits == 3 && cfg.three_qubit_layout.size() == 3) {
    return cvpulse::remap_qubits(c, cfg.three_qubit_layout);
  }
  return c;
}

int run_sweep(const std::string& kind, const std::string& config_path, double min_ns,
              double max_ns, double step_ns, const std::string& out_path, int jobs) {
  if (kind != "cv" && kind != "cx") {
    throw std::invalid_argument("sweep: kind must be 'cv' or 'cx'");
  }
  if (!(step_ns > 0.0)) throw std::invalid_argument("sweep: step must be positive");
  if (min_ns > max_ns) throw std::invalid_argument("sweep: min must not exceed max");
  const auto cfg = cvpulse::load_device_config(config_path);
  const bool is_cv = kind == "cv";
  const double nominal = is_cv ? cfg.t_cv_ns : cfg.tau_cx_ns;

  std::vector<double> grid;
  for (double t = min_ns; t <= max_ns + 1e-9; t += step_ns) grid.push_back(t);
  const auto points = cvpulse::fidelity_sweep(
      is_cv ? cvpulse::TrialKind::CV : cvpulse::TrialKind::CX, nominal, grid, jobs);

  std::string csv = "tau_d_ns,fidelity\n";
  for (const auto& p : points) {
    csv += fmt("%g", p.tau_d_ns);
    csv += ',';
    csv += fmt("%.6f", p.fidelity);
    csv += '\n';
  }
  write_output(out_path, csv);
  return kExitOk;
}

int run_weyl(const std::string& gate, const std::string& matrix_path, int extra_budget) {
  if (gate.empty() == matrix_path.empty()) {
    throw std::invalid_argument("weyl: pass exactly one of --gate or --matrix");
  }
  const cvpulse::Unitary u = gate.empty() ? unitary_from_file(matrix_path) : target_by_name(gate);
  if (u.dim() != 4) throw std::invalid_argument("weyl: need a two-qubit (4x4) unitary");

  const cvpulse::WeylPoint p = cvpulse::canonical_coordinates(u);
  std::cout << "coordinates: [" << fmt("%.4f", p.a) << ", " << fmt("%.4f", p.b) << ", "
            << fmt("%.4f", p.c) << "]\n";
  const auto label = cvpulse::classify_named_point(p);
  std::cout << "named point: " << (label ? *label : "none") << "\n";

  auto verdict = [](bool ok) { return ok ? "reachable" : "unreachable"; };
  std::cout << "2\xC3\x97" "CV: " << verdict(cvpulse::reachable_two(kPi / 4.0, p)) << "\n";
  std::cout << "3\xC3\x97" "CV: " << verdict(cvpulse::reachable_n(kPi / 4.0, 3, p)) << "\n";
  std::cout << "2\xC3\x97" "CX: " << verdict(cvpulse::reachable_two(kPi / 2.0, p)) << "\n";
  if (extra_budget > 0) {
    if (extra_budget < 2) throw std::invalid_argument("weyl: budget must be >= 2");
    const bool ok = extra_budget == 2 ? cvpulse::reachable_two(kPi / 4.0, p)
                                      : cvpulse::reachable_n(kPi / 4.0, extra_budget, p);
    std::cout << extra_budget << "\xC3\x97" "CV: " << verdict(ok) << "\n";
  }
  return kExitOk;
}

int run_verify(const std::string& named, const std::string& circuit_path,
               const std::string& target_name, const std::string& config_path) {
  if (named.empty() == circuit_path.empty()) {
    throw std::invalid_argument("verify: pass exactly one of --named or --circuit");
  }
  cvpulse::Circuit logical;
  std::optional<cvpulse::Unitary> target;
  std::string shown_name;
  if (!named.empty()) {
    const auto id = cvpulse::named_circuit_from_string(named);
    logical = cvpulse::build_named(id);
    target = cvpulse::named_circuit_target(id);
    shown_name = named;
  } else {
    logical = circuit_from_file(circuit_path);
    shown_name = circuit_path;
  }
  if (!target_name.empty()) target = target_by_name(target_name);
  if (!target) throw std::invalid_argument("verify: --target is required with --circuit");

  const auto cfg = cvpulse::load_device_config(config_path);
  const double dist = cvpulse::phase_distance(cvpulse::eval_unitary(logical), *target);
  const bool pass = dist <= 1e-9;
  const double time_ns = cvpulse::circuit_gate_time(place_on_device(logical, cfg), cfg.timing);

  std::cout << "circuit: " << shown_name << "\n";
  std::cout << "#CX = " << cvpulse::count_gates(logical, cvpulse::GateName::CX) << "\n";
  std::cout << "#CV = " << cvpulse::count_cv_family(logical) << "\n";
  std::cout << "phase_distance = " << fmt("%.3e", dist) << "\n";
  std::cout << "verdict: " << (pass ? "pass" : "fail") << "\n";
  std::cout << "gate_time_ns = " << fmt("%.10g", time_ns) << "\n";
  return pass ? kExitOk : kExitVerifyFail;
}

int run_schedule(const std::string& kind, const std::string& named,
                 const std::string& config_path, const std::string& out_path, bool as_json) {
  if (kind.empty() == named.empty()) {
    throw std::invalid_argument("schedule: pass a kind (cx|cv) or --named");
  }
  const auto cfg = cvpulse::load_device_config(config_path);
  cvpulse::PulseSchedule sched;
  if (!kind.empty()) {
    if (kind != "cv" && kind != "cx") {
      throw std::invalid_argument("schedule: kind must be 'cv' or 'cx'");
    }
    sched = cvpulse::build_two_qubit_schedule(
        kind == "cv" ? cvpulse::ScheduleKind::CV : cvpulse::ScheduleKind::CX, cfg.timing,
        cfg.default_pair);
  } else {
    const auto id = cvpulse::named_circuit_from_string(named);
    sched = cvpulse::circuit_schedule(place_on_device(cvpulse::build_named(id), cfg), cfg.timing);
  }
  write_output(out_path, as_json ? cvpulse::export_schedule_json(sched)
                                 : cvpulse::export_schedule_text(sched));
  std::cout << "total_time_ns = " << fmt("%.10g", cvpulse::total_time(sched)) << "\n";
  return kExitOk;
}

int run_synth(const std::string& target_name, const std::string& basis_name, int k,
              std::uint64_t seed, int restarts, int jobs) {
  cvpulse::SynthesisProblem prob;
  prob.target = target_by_name(target_name).mat();
  prob.basis = target_by_name(basis_name).mat();
  prob.k = k;
  prob.seed = seed;
  prob.restarts = restarts;
  prob.jobs = jobs;
  const auto res = cvpulse::synthesize(prob);

  std::cout << "achieved_fidelity = " << fmt("%.10f", res.achieved_fidelity) << "\n";
  std::cout << "converged = " << (res.converged ? "true" : "false") << "\n";
  for (std::size_t i = 0; i < res.local_layers.size(); ++i) {
    const auto& l = res.local_layers[i];
    std::cout << "layer " << i << " q0: [" << fmt("%.10g", l.q0[0]) << ", "
              << fmt("%.10g", l.q0[1]) << ", " << fmt("%.10g", l.q0[2]) << "] q1: ["
              << fmt("%.10g", l.q1[0]) << ", " << fmt("%.10g", l.q1[1]) << ", "
              << fmt("%.10g", l.q1[2]) << "]\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pulse-level CV gate toolkit: sweeps, Weyl classification, synthesis, "
               "circuit verification, and scheduling"};
  app.require_subcommand(1);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Trial-gate fidelity vs CR pulse duration (CSV)");
  std::string sweep_kind, sweep_config, sweep_out;
  double sweep_min = 0.0, sweep_max = 0.0, sweep_step = 0.5;
  int sweep_jobs = 1;
  sweep->add_option("kind", sweep_kind, "cv or cx")->required();
  sweep->add_option("--config", sweep_config, "device config JSON")->required();
  sweep->add_option("--min", sweep_min, "first tau_d in ns")->required();
  sweep->add_option("--max", sweep_max, "last tau_d in ns")->required();
  sweep->add_option("--step", sweep_step, "grid step in ns (default 0.5)");
  sweep->add_option("--out", sweep_out, "output CSV path (default stdout)");
  sweep->add_option("--jobs", sweep_jobs, "parallel workers");

  // weyl
  auto* weyl = app.add_subcommand("weyl", "Canonical coordinates and CV/CX reachability");
  std::string weyl_gate, weyl_matrix;
  int weyl_budget = 0;
  weyl->add_option("--gate", weyl_gate, "named two-qubit gate");
  weyl->add_option("--matrix", weyl_matrix, "path to a 4x4 matrix text file");
  weyl->add_option("--n", weyl_budget, "extra CV budget to report (>= 2)");

  // verify
  auto* verify = app.add_subcommand("verify", "Check a circuit against a target gate");
  std::string verify_named, verify_circuit, verify_target, verify_config;
  verify->add_option("--named", verify_named, "built-in circuit id");
  verify->add_option("--circuit", verify_circuit, "path to a circuit JSON file");
  verify->add_option("--target", verify_target, "target gate name");
  verify->add_option("--config", verify_config, "device config JSON")->required();

  // schedule
  auto* schedule = app.add_subcommand("schedule", "Export a pulse or circuit schedule");
  std::string sched_kind, sched_named, sched_config, sched_out;
  bool sched_json = false;
  schedule->add_option("kind", sched_kind, "cx or cv (pulse-level, default pair)");
  schedule->add_option("--named", sched_named, "built-in circuit id (gate-level)");
  schedule->add_option("--config", sched_config, "device config JSON")->required();
  schedule->add_option("--out", sched_out, "output path (default stdout)");
  schedule->add_flag("--json", sched_json, "JSON export instead of CSV text");

  // synth
  auto* synth = app.add_subcommand("synth", "Numerical decomposition over a two-qubit basis");
  std::string synth_target, synth_basis = "CV";
  int synth_k = 2, synth_restarts = 16, synth_jobs = 1;
  std::uint64_t synth_seed = 0;
  synth->add_option("--target", synth_target, "target gate name")->required();
  synth->add_option("--basis", synth_basis, "basis gate name (default CV)");
  synth->add_option("--k", synth_k, "basis applications (1..4)");
  synth->add_option("--seed", synth_seed, "RNG seed");
  synth->add_option("--restarts", synth_restarts, "multi-start count");
  synth->add_option("--jobs", synth_jobs, "parallel workers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (sweep->parsed()) {
      return run_sweep(sweep_kind, sweep_config, sweep_min, sweep_max, sweep_step, sweep_out,
                       sweep_jobs);
    }
    if (weyl->parsed()) return run_weyl(weyl_gate, weyl_matrix, weyl_budget);
    if (verify->parsed()) {
      return run_verify(verify_named, verify_circuit, verify_target, verify_config);
    }
    if (schedule->parsed()) {
      return run_schedule(sched_kind, sched_named, sched_config, sched_out, sched_json);
    }
    if (synth->parsed()) {
      return run_synth(synth_target, synth_basis, synth_k, synth_seed, synth_restarts,
                       synth_jobs);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
