#include "qcnash/circuit.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qcnash/common.hpp"

namespace qcnash {

namespace {

struct GateSpec {
  std::string_view name;
  int arity;
  bool parameterized;
  bool clifford;
};

constexpr std::array<GateSpec, kGateKindCount> kGateTable = {{
    {"h", 1, false, true},
    {"x", 1, false, true},
    {"y", 1, false, true},
    {"z", 1, false, true},
    {"s", 1, false, true},
    {"t", 1, false, false},
    {"tdg", 1, false, false},
    {"rx", 1, true, false},
    {"ry", 1, true, false},
    {"rz", 1, true, false},
    {"rzz", 2, true, false},
    {"cnot", 2, false, true},
    {"cz", 2, false, true},
    {"double_excitation", 4, true, false},
}};

const GateSpec& spec_of(GateKind k) { return kGateTable[static_cast<int>(k)]; }

}  // namespace

int gate_arity(GateKind k) { return spec_of(k).arity; }
bool gate_parameterized(GateKind k) { return spec_of(k).parameterized; }
bool gate_clifford(GateKind k) { return spec_of(k).clifford; }
std::string_view gate_name(GateKind k) { return spec_of(k).name; }

std::optional<GateKind> gate_from_name(std::string_view name) {
  for (int i = 0; i < kGateKindCount; ++i) {
    if (kGateTable[i].name == name) return static_cast<GateKind>(i);
  }
  return std::nullopt;
}

const std::vector<GateKind>& all_gate_kinds() {
  static const std::vector<GateKind> kinds = [] {
    std::vector<GateKind> v;
    for (int i = 0; i < kGateKindCount; ++i) v.push_back(static_cast<GateKind>(i));
    return v;
  }();
  return kinds;
}

namespace {

void check_qubits(GateKind kind, const std::vector<int>& qubits, int n_qubits) {
  if (static_cast<int>(qubits.size()) != gate_arity(kind)) {
    throw std::invalid_argument("gate " + std::string(gate_name(kind)) + " takes " +
                                std::to_string(gate_arity(kind)) + " qubits, got " +
                                std::to_string(qubits.size()));
  }
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] < 0 || qubits[i] >= n_qubits) {
      throw std::invalid_argument("qubit " + std::to_string(qubits[i]) +
                                  " out of range [0," + std::to_string(n_qubits) + ")");
    }
    for (std::size_t j = i + 1; j < qubits.size(); ++j) {
      if (qubits[i] == qubits[j]) {
        throw std::invalid_argument("duplicate qubit " + std::to_string(qubits[i]));
      }
    }
  }
}

}  // namespace

int CircuitDag::add_op(GateKind kind, std::vector<int> qubits) {
  check_qubits(kind, qubits, n_qubits);
  OpNode node;
  node.id = next_id++;
  node.kind = kind;
  node.qubits = std::move(qubits);
  if (gate_parameterized(kind)) node.param_slot = param_count++;
  ops.push_back(std::move(node));
  return ops.back().id;
}

int CircuitDag::insert_op(std::size_t pos, GateKind kind, std::vector<int> qubits) {
  check_qubits(kind, qubits, n_qubits);
  if (pos > ops.size()) throw std::invalid_argument("insert position past end");
  OpNode node;
  node.id = next_id++;
  node.kind = kind;
  node.qubits = std::move(qubits);
  const int id = node.id;
  ops.insert(ops.begin() + static_cast<std::ptrdiff_t>(pos), std::move(node));
  renumber_params();
  return id;
}

int CircuitDag::renumber_params() {
  int slot = 0;
  for (auto& op : ops) {
    if (gate_parameterized(op.kind)) {
      op.param_slot = slot++;
    } else {
      op.param_slot.reset();
    }
  }
  param_count = slot;
  return param_count;
}

const OpNode* CircuitDag::find(int id) const {
  for (const auto& op : ops) {
    if (op.id == id) return &op;
  }
  return nullptr;
}

bool CircuitDag::operator==(const CircuitDag& other) const {
  if (n_qubits != other.n_qubits || ops.size() != other.ops.size()) return false;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const auto& a = ops[i];
    const auto& b = other.ops[i];
    if (a.kind != b.kind || a.qubits != b.qubits || a.param_slot != b.param_slot) {
      return false;
    }
  }
  return param_count == other.param_count;
}

Topology::Topology(int n, std::initializer_list<std::pair<int, int>> e) : n_qubits(n) {
  for (const auto& [a, b] : e) add_edge(a, b);
}

Topology Topology::all_to_all(int n) {
  Topology t;
  t.n_qubits = n;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) t.edges.emplace(a, b);
  }
  return t;
}

void Topology::add_edge(int a, int b) {
  if (a == b) throw std::invalid_argument("self-loop edge");
  if (a < 0 || b < 0 || a >= n_qubits || b >= n_qubits) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  edges.emplace(std::min(a, b), std::max(a, b));
}

bool Topology::has_edge(int a, int b) const {
  return edges.count({std::min(a, b), std::max(a, b)}) > 0;
}

std::vector<Diagnostic> validate(const CircuitDag& dag, const Topology& topo) {
  if (dag.n_qubits != topo.n_qubits) {
    throw usage_error("dag has " + std::to_string(dag.n_qubits) + " qubits but topology has " +
                      std::to_string(topo.n_qubits));
  }
  std::vector<Diagnostic> out;
  for (const auto& op : dag.ops) {
    bool range_ok = true;
    for (int q : op.qubits) {
      if (q < 0 || q >= dag.n_qubits) {
        out.push_back({DiagnosticCode::qubit_out_of_range, op.id,
                       "node " + std::to_string(op.id) + ": qubit " + std::to_string(q) +
                           " out of range"});
        range_ok = false;
      }
    }
    for (std::size_t i = 0; i < op.qubits.size(); ++i) {
      for (std::size_t j = i + 1; j < op.qubits.size(); ++j) {
        if (op.qubits[i] == op.qubits[j]) {
          out.push_back({DiagnosticCode::duplicate_qubit, op.id,
                         "node " + std::to_string(op.id) + ": duplicate qubit " +
                             std::to_string(op.qubits[i])});
        }
      }
    }
    if (!range_ok) continue;
    if (gate_arity(op.kind) == 2) {
      if (!topo.has_edge(op.qubits[0], op.qubits[1])) {
        out.push_back({DiagnosticCode::non_edge, op.id,
                       "node " + std::to_string(op.id) + ": (" + std::to_string(op.qubits[0]) +
                           "," + std::to_string(op.qubits[1]) + ") is not a topology edge"});
      }
    } else if (gate_arity(op.kind) == 4) {
      // all pairs among the four qubits must be coupled
      for (std::size_t i = 0; i < op.qubits.size(); ++i) {
        for (std::size_t j = i + 1; j < op.qubits.size(); ++j) {
          if (!topo.has_edge(op.qubits[i], op.qubits[j])) {
            out.push_back({DiagnosticCode::non_edge, op.id,
                           "node " + std::to_string(op.id) + ": (" +
                               std::to_string(op.qubits[i]) + "," +
                               std::to_string(op.qubits[j]) + ") is not a topology edge"});
          }
        }
      }
    }
  }
  int expected_slot = 0;
  for (const auto& op : dag.ops) {
    const bool want = gate_parameterized(op.kind);
    if (want) {
      if (!op.param_slot || *op.param_slot != expected_slot) {
        out.push_back({DiagnosticCode::bad_param_numbering, op.id,
                       "node " + std::to_string(op.id) + ": expected param slot " +
                           std::to_string(expected_slot)});
      }
      ++expected_slot;
    } else if (op.param_slot) {
      out.push_back({DiagnosticCode::bad_param_numbering, op.id,
                     "node " + std::to_string(op.id) + ": parameterless gate has a param slot"});
    }
  }
  if (expected_slot != dag.param_count) {
    out.push_back({DiagnosticCode::bad_param_numbering, -1,
                   "param_count " + std::to_string(dag.param_count) + " but " +
                       std::to_string(expected_slot) + " parameterized nodes"});
  }
  return out;
}

std::vector<OpNode> lower(const CircuitDag& dag) { return dag.ops; }

int depth(const CircuitDag& dag) {
  std::vector<int> wire_depth(dag.n_qubits, 0);
  int d = 0;
  for (const auto& op : dag.ops) {
    int layer = 0;
    for (int q : op.qubits) layer = std::max(layer, wire_depth[q]);
    ++layer;
    for (int q : op.qubits) wire_depth[q] = layer;
    d = std::max(d, layer);
  }
  return d;
}

std::string serialize(const CircuitDag& dag) {
  return serialize(dag, Eigen::VectorXd());
}

std::string serialize(const CircuitDag& dag, const Eigen::VectorXd& theta) {
  nlohmann::json doc;
  doc["n_qubits"] = dag.n_qubits;
  doc["ops"] = nlohmann::json::array();
  for (const auto& op : dag.ops) {
    nlohmann::json node;
    node["kind"] = std::string(gate_name(op.kind));
    node["qubits"] = op.qubits;
    if (op.param_slot && theta.size() > 0) {
      if (*op.param_slot >= theta.size()) {
        throw std::invalid_argument("theta shorter than param_count");
      }
      node["theta"] = theta[*op.param_slot];
    }
    doc["ops"].push_back(std::move(node));
  }
  return doc.dump(2) + "\n";
}

DeserializedCircuit deserialize(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw usage_error("circuit parse error: " + std::string(e.what()));
  }
  if (!doc.is_object()) throw usage_error("circuit file: top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "n_qubits" && key != "ops") {
      throw usage_error("circuit file: unknown field '" + key + "'");
    }
  }
  if (!doc.contains("n_qubits") || !doc["n_qubits"].is_number_integer()) {
    throw usage_error("circuit file: missing integer field 'n_qubits'");
  }
  const int n = doc["n_qubits"].get<int>();
  if (n < 1) throw usage_error("circuit file: n_qubits must be >= 1");
  if (!doc.contains("ops") || !doc["ops"].is_array()) {
    throw usage_error("circuit file: missing array field 'ops'");
  }

  DeserializedCircuit out;
  out.dag = CircuitDag(n);
  std::vector<double> thetas;
  std::size_t index = 0;
  for (const auto& node : doc["ops"]) {
    const std::string where = "ops[" + std::to_string(index) + "]";
    if (!node.is_object()) throw usage_error("circuit file: " + where + " must be an object");
    for (const auto& [key, value] : node.items()) {
      if (key != "kind" && key != "qubits" && key != "theta") {
        throw usage_error("circuit file: " + where + ": unknown field '" + key + "'");
      }
    }
    if (!node.contains("kind") || !node["kind"].is_string()) {
      throw usage_error("circuit file: " + where + ": missing string field 'kind'");
    }
    const std::string kind_name = node["kind"].get<std::string>();
    const auto kind = gate_from_name(kind_name);
    if (!kind) {
      throw usage_error("circuit file: " + where + ": unknown gate name '" + kind_name + "'");
    }
    if (!node.contains("qubits") || !node["qubits"].is_array()) {
      throw usage_error("circuit file: " + where + ": missing array field 'qubits'");
    }
    std::vector<int> qubits;
    for (const auto& q : node["qubits"]) {
      if (!q.is_number_integer()) {
        throw usage_error("circuit file: " + where + ": qubits must be integers");
      }
      qubits.push_back(q.get<int>());
    }
    double theta_value = 0.0;
    if (node.contains("theta")) {
      if (!gate_parameterized(*kind)) {
        throw usage_error("circuit file: " + where + ": gate '" + kind_name +
                          "' takes no parameter");
      }
      if (!node["theta"].is_number()) {
        throw usage_error("circuit file: " + where + ": theta must be a number");
      }
      theta_value = node["theta"].get<double>();
    }
    try {
      out.dag.add_op(*kind, std::move(qubits));
    } catch (const std::invalid_argument& e) {
      throw usage_error("circuit file: " + where + ": " + e.what());
    }
    if (gate_parameterized(*kind)) thetas.push_back(theta_value);
    ++index;
  }
  out.theta = Eigen::Map<const Eigen::VectorXd>(thetas.data(),
                                                static_cast<Eigen::Index>(thetas.size()));
  return out;
}

}  // namespace qcnash
