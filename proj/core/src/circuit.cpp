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

#include "cvpulse/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace cvpulse {

namespace {

constexpr double kPi = std::numbers::pi;

void require_op(const CircuitOp& op, int num_qubits) {
  const int arity = gate_num_qubits(op.gate);
  if (static_cast<int>(op.qubits.size()) != arity) {
    throw std::invalid_argument(std::string("circuit: ") + to_string(op.gate) + " takes " +
                                std::to_string(arity) + " qubits");
  }
  std::set<int> seen;
  for (int q : op.qubits) {
    if (q < 0 || q >= num_qubits) {
      throw std::invalid_argument("circuit: qubit index " + std::to_string(q) + " out of range");
    }
    if (!seen.insert(q).second) {
      throw std::invalid_argument("circuit: repeated qubit in one op");
    }
  }
  if (static_cast<int>(op.params.size()) != gate_param_count(op.gate)) {
    throw std::invalid_argument(std::string("circuit: wrong parameter count for ") +
                                to_string(op.gate));
  }
}

// g acts on `qubits` (first listed = most significant gate factor) inside an
// n-qubit register with qubit 0 the most significant register factor.
Mat embed(const Mat& g, const std::vector<int>& qubits, int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  const int m = static_cast<int>(qubits.size());
  const Eigen::Index gdim = Eigen::Index{1} << m;
  Mat out = Mat::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    Eigen::Index c = 0;
    for (int b = 0; b < m; ++b) {
      const int shift = n - 1 - qubits[static_cast<std::size_t>(b)];
      c = (c << 1) | ((col >> shift) & 1);
    }
    for (Eigen::Index r = 0; r < gdim; ++r) {
      Eigen::Index row = col;
      for (int b = 0; b < m; ++b) {
        const int shift = n - 1 - qubits[static_cast<std::size_t>(b)];
        const Eigen::Index bit = (r >> (m - 1 - b)) & 1;
        row = (row & ~(Eigen::Index{1} << shift)) | (bit << shift);
      }
      out(row, col) = g(r, c);
    }
  }
  return out;
}

CircuitOp op0(GateName g, std::vector<int> q) { return CircuitOp{g, std::move(q), {}}; }
CircuitOp op2(GateName g, std::vector<int> q, double a, double b) {
  return CircuitOp{g, std::move(q), {a, b}};
}
CircuitOp op3(GateName g, std::vector<int> q, double a, double b, double c) {
  return CircuitOp{g, std::move(q), {a, b, c}};
}

}  // namespace

const char* to_string(NamedCircuit id) {
  switch (id) {
    case NamedCircuit::QASM_CV: return "QASM_CV";
    case NamedCircuit::SQISWAP_CX: return "SQISWAP_CX";
    case NamedCircuit::SQISWAP_CV: return "SQISWAP_CV";
    case NamedCircuit::SQSWAP_CX: return "SQSWAP_CX";
    case NamedCircuit::SQSWAP_CV: return "SQSWAP_CV";
    case NamedCircuit::TOF_CX: return "TOF_CX";
    case NamedCircuit::TOF_CV: return "TOF_CV";
  }
  throw std::logic_error("to_string: invalid circuit id");
}

NamedCircuit named_circuit_from_string(const std::string& s) {
  for (NamedCircuit id : {NamedCircuit::QASM_CV, NamedCircuit::SQISWAP_CX,
                          NamedCircuit::SQISWAP_CV, NamedCircuit::SQSWAP_CX,
                          NamedCircuit::SQSWAP_CV, NamedCircuit::TOF_CX,
                          NamedCircuit::TOF_CV}) {
    if (s == to_string(id)) return id;
  }
  throw std::invalid_argument("named_circuit_from_string: unknown circuit '" + s + "'");
}

Unitary eval_unitary(const Circuit& c) {
  if (c.num_qubits < 1 || c.num_qubits > 12) {
    throw std::invalid_argument("eval_unitary: num_qubits must be in 1..12");
  }
  const Eigen::Index dim = Eigen::Index{1} << c.num_qubits;
  Mat u = Mat::Identity(dim, dim);
  for (const auto& op : c.ops) {
    require_op(op, c.num_qubits);
    u = embed(named_gate(op.gate, op.params).mat(), op.qubits, c.num_qubits) * u;
  }
  return Unitary(u);
}

Circuit build_named(NamedCircuit id) {
  using G = GateName;
  Circuit c;
  switch (id) {
    case NamedCircuit::QASM_CV:
      c.num_qubits = 2;
      c.ops = {op0(G::H, {1}),  op0(G::CX, {0, 1}), op0(G::Tdg, {1}),
               op0(G::CX, {0, 1}), op0(G::T, {0}),  op0(G::T, {1}),
               op0(G::H, {1})};
      return c;
    case NamedCircuit::SQISWAP_CX:
      c.num_qubits = 2;
      c.ops = {op2(G::U2, {0}, -3 * kPi / 2, kPi / 2),
               op2(G::U2, {1}, -kPi / 2, kPi / 2),
               op0(G::CX, {0, 1}),
               op3(G::U3, {0}, 3 * kPi / 4, 0, 3 * kPi / 2),
               op2(G::U2, {1}, 3 * kPi / 2, kPi / 4),
               op0(G::CX, {0, 1}),
               op2(G::U2, {0}, 3 * kPi / 2, 0)};
      return c;
    case NamedCircuit::SQISWAP_CV:
      c.num_qubits = 2;
      c.ops = {op2(G::U2, {0}, 0, 0),
               op0(G::Z, {1}),
               op0(G::CV, {0, 1}),
               op2(G::U2, {0}, kPi / 2, 5 * kPi / 4),
               op3(G::U3, {1}, kPi / 4, 0, -kPi / 2),
               op0(G::CV, {0, 1}),
               op2(G::U2, {0}, 3 * kPi / 2, 3 * kPi / 4),
               op3(G::U3, {1}, kPi / 4, 0, -kPi / 2)};
      return c;
    case NamedCircuit::SQSWAP_CX:
      c.num_qubits = 2;
      c.ops = {op0(G::Z, {0}),
               op3(G::U3, {1}, kPi, kPi, -kPi),
               op0(G::CX, {0, 1}),
               op3(G::U3, {0}, kPi / 4, -3 * kPi / 2, kPi / 2),
               op2(G::U2, {1}, -kPi, -3 * kPi / 4),
               op0(G::CX, {0, 1}),
               op3(G::U3, {0}, kPi / 4, 0, -3 * kPi / 2),
               op2(G::U2, {1}, 0, -3 * kPi / 2),
               op0(G::CX, {0, 1}),
               op0(G::Z, {0}),
               op2(G::U2, {1}, kPi, kPi / 2)};
      return c;
    case NamedCircuit::SQSWAP_CV:
      c.num_qubits = 2;
      c.ops = {op2(G::U2, {0}, kPi, 0),
               op0(G::X, {1}),
               op0(G::CV, {0, 1}),
               op2(G::U2, {0}, kPi / 2, 5 * kPi / 4),
               op3(G::U3, {1}, kPi / 4, 0, -kPi / 2),
               op0(G::CV, {0, 1}),
               op2(G::U2, {0}, -kPi / 2, 3 * kPi / 4),
               op3(G::U3, {1}, 3 * kPi / 4, kPi, -kPi / 2),
               op0(G::CV, {0, 1}),
               op3(G::U3, {0}, kPi, -kPi, -kPi / 4),
               op2(G::U2, {1}, 7 * kPi / 4, kPi)};
      return c;
    case NamedCircuit::TOF_CX:
      c.num_qubits = 3;
      c.ops = {op0(G::H, {2}),   op0(G::Tdg, {0}),   op0(G::Tdg, {1}),
               op0(G::Tdg, {2}), op0(G::CX, {0, 1}), op0(G::CX, {1, 2}),
               op0(G::CX, {0, 1}), op0(G::Tdg, {2}), op0(G::CX, {1, 2}),
               op0(G::CX, {0, 1}), op0(G::Z, {2}),   op0(G::Z, {1}),
               op0(G::T, {2}),   op0(G::T, {1}),     op0(G::CX, {1, 2}),
               op0(G::CX, {0, 1}), op0(G::Z, {2}),   op0(G::T, {2}),
               op0(G::CX, {1, 2}), op0(G::H, {2})};
      return c;
    case NamedCircuit::TOF_CV:
      c.num_qubits = 3;
      c.ops = {op0(G::CV, {1, 2}),  op0(G::CX, {0, 1}), op0(G::CVdg, {1, 2}),
               op0(G::CX, {1, 0}),  op0(G::CX, {0, 1}), op0(G::CV, {1, 2})};
      return c;
  }
  throw std::logic_error("build_named: invalid circuit id");
}

Unitary named_circuit_target(NamedCircuit id) {
  switch (id) {
    case NamedCircuit::QASM_CV:
      return named_gate(GateName::CV);
    case NamedCircuit::SQISWAP_CX:
    case NamedCircuit::SQISWAP_CV:
      return named_gate(GateName::SQiSWAP);
    case NamedCircuit::SQSWAP_CX:
    case NamedCircuit::SQSWAP_CV:
      return named_gate(GateName::SQSWAP);
    case NamedCircuit::TOF_CX:
      return named_gate(GateName::Toffoli);
    case NamedCircuit::TOF_CV: {
      const Mat swap01 = embed(named_gate(GateName::SWAP).mat(), {0, 1}, 3);
      return Unitary(swap01 * named_gate(GateName::Toffoli).mat());
    }
  }
  throw std::logic_error("named_circuit_target: invalid circuit id");
}

bool equiv_up_to_phase(const Circuit& c, const Unitary& target, double tol) {
  return phase_distance(eval_unitary(c), target) <= tol;
}

namespace {

double op_duration(const CircuitOp& op, const DeviceTimingConfig& cfg,
                   const std::map<GateName, double>& durations) {
  if (const auto it = durations.find(op.gate); it != durations.end()) return it->second;
  switch (op.gate) {
    case GateName::Z:
    case GateName::T:
    case GateName::Tdg:
      return 0.0;  // diagonal, realized as frame changes
    case GateName::H:
    case GateName::X:
    case GateName::U2:
    case GateName::U3:
      return cfg.single_qubit_pulse_ns;
    case GateName::CX:
      return total_time(build_two_qubit_schedule(ScheduleKind::CX, cfg,
                                                 {op.qubits[0], op.qubits[1]}));
    case GateName::CV:
    case GateName::CVdg:
      return total_time(build_two_qubit_schedule(ScheduleKind::CV, cfg,
                                                 {op.qubits[0], op.qubits[1]}));
    default:
      throw std::invalid_argument(std::string("gate time: no duration rule for ") +
                                  to_string(op.gate) + "; pass an explicit duration");
  }
}

struct ScheduledOp {
  double start;
  double duration;
};

std::vector<ScheduledOp> list_schedule(const Circuit& c, const DeviceTimingConfig& cfg,
                                       const std::map<GateName, double>& durations) {
  std::vector<double> ready(static_cast<std::size_t>(c.num_qubits), 0.0);
  std::vector<ScheduledOp> out;
  out.reserve(c.ops.size());
  for (const auto& op : c.ops) {
    require_op(op, c.num_qubits);
    const double dur = op_duration(op, cfg, durations);
    double start = 0.0;
    for (int q : op.qubits) start = std::max(start, ready[static_cast<std::size_t>(q)]);
    for (int q : op.qubits) ready[static_cast<std::size_t>(q)] = start + dur;
    out.push_back(ScheduledOp{start, dur});
  }
  return out;
}

}  // namespace

double circuit_gate_time(const Circuit& c, const DeviceTimingConfig& cfg,
                         const std::map<GateName, double>& durations) {
  double end = 0.0;
  const auto rows = list_schedule(c, cfg, durations);
  for (const auto& r : rows) end = std::max(end, r.start + r.duration);
  return end;
}

PulseSchedule circuit_schedule(const Circuit& c, const DeviceTimingConfig& cfg,
                               const std::map<GateName, double>& durations) {
  PulseSchedule s;
  s.dt_granularity_ns = cfg.dt_granularity_ns;
  for (int q = 0; q < c.num_qubits; ++q) s.channels.push_back("q" + std::to_string(q));
  const auto rows = list_schedule(c, cfg, durations);
  for (std::size_t i = 0; i < c.ops.size(); ++i) {
    const auto& op = c.ops[i];
    std::string label = std::string(to_string(op.gate)) + "[";
    for (std::size_t k = 0; k < op.qubits.size(); ++k) {
      if (k) label += "->";
      label += std::to_string(op.qubits[k]);
    }
    label += "]";
    for (int q : op.qubits) {
      s.instructions.push_back(ScheduleInstruction{"q" + std::to_string(q), rows[i].start,
                                                   rows[i].duration, label});
    }
  }
  return s;
}

Circuit remap_qubits(const Circuit& c, const std::vector<int>& mapping) {
  if (static_cast<int>(mapping.size()) != c.num_qubits) {
    throw std::invalid_argument("remap_qubits: mapping size must equal num_qubits");
  }
  std::set<int> seen;
  int maxq = -1;
  for (int m : mapping) {
    if (m < 0) throw std::invalid_argument("remap_qubits: negative target index");
    if (!seen.insert(m).second) throw std::invalid_argument("remap_qubits: duplicate target index");
    maxq = std::max(maxq, m);
  }
  Circuit out;
  out.num_qubits = maxq + 1;
  out.ops = c.ops;
  for (auto& op : out.ops) {
    for (int& q : op.qubits) q = mapping[static_cast<std::size_t>(q)];
  }
  return out;
}

int count_gates(const Circuit& c, GateName g) {
  int n = 0;
  for (const auto& op : c.ops) {
    if (op.gate == g) ++n;
  }
  return n;
}

int count_cv_family(const Circuit& c) {
  return count_gates(c, GateName::CV) + count_gates(c, GateName::CVdg);
}

Circuit parse_circuit_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("circuit json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("num_qubits") || !j.contains("ops")) {
    throw std::invalid_argument("circuit json: need object with num_qubits and ops");
  }
  Circuit c;
  if (!j["num_qubits"].is_number_integer()) {
    throw std::invalid_argument("circuit json: num_qubits must be an integer");
  }
  c.num_qubits = j["num_qubits"].get<int>();
  if (c.num_qubits < 1) throw std::invalid_argument("circuit json: num_qubits must be >= 1");
  if (!j["ops"].is_array()) throw std::invalid_argument("circuit json: ops must be an array");
  for (const auto& jo : j["ops"]) {
    if (!jo.is_object() || !jo.contains("gate") || !jo.contains("qubits")) {
      throw std::invalid_argument("circuit json: each op needs gate and qubits");
    }
    CircuitOp op;
    op.gate = gate_from_string(jo["gate"].get<std::string>());
    for (const auto& q : jo["qubits"]) op.qubits.push_back(q.get<int>());
    if (jo.contains("params")) {
      for (const auto& p : jo["params"]) op.params.push_back(p.get<double>());
    }
    require_op(op, c.num_qubits);
    c.ops.push_back(std::move(op));
  }
  return c;
}

std::string circuit_to_json(const Circuit& c) {
  nlohmann::json j;
  j["num_qubits"] = c.num_qubits;
  j["ops"] = nlohmann::json::array();
  for (const auto& op : c.ops) {
    nlohmann::json jo;
    jo["gate"] = to_string(op.gate);
    jo["qubits"] = op.qubits;
    if (!op.params.empty()) jo["params"] = op.params;
    j["ops"].push_back(jo);
  }
  return j.dump(2) + "\n";
}

}  // namespace cvpulse
