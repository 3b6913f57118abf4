#pragma once

#include <Eigen/Core>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qcnash {

enum class GateKind {
  h,
  x,
  y,
  z,
  s,
  t,
  tdg,
  rx,
  ry,
  rz,
  rzz,
  cnot,
  cz,
  double_excitation,
};

inline constexpr int kGateKindCount = 14;

int gate_arity(GateKind k);
bool gate_parameterized(GateKind k);
bool gate_clifford(GateKind k);
std::string_view gate_name(GateKind k);
std::optional<GateKind> gate_from_name(std::string_view name);
const std::vector<GateKind>& all_gate_kinds();

/// One gate node. `id` is unique within a dag and survives edits;
/// `param_slot` indexes the dag's parameter vector and is reassigned in
/// list order after every structural edit.
struct OpNode {
  int id = 0;
  GateKind kind = GateKind::h;
  std::vector<int> qubits;
  std::optional<int> param_slot;
};

/// Gate list in temporal order. The wire-precedence DAG is implicit: two
/// nodes sharing a qubit are ordered by list position.
struct CircuitDag {
  int n_qubits = 0;
  std::vector<OpNode> ops;
  int param_count = 0;
  int next_id = 0;

  explicit CircuitDag(int n = 0) : n_qubits(n) {}

  /// Appends a node at the end; returns its id. Throws std::invalid_argument
  /// on wrong arity, out-of-range or duplicate qubits.
  int add_op(GateKind kind, std::vector<int> qubits);
  /// Inserts at `pos` and renumbers parameter slots.
  int insert_op(std::size_t pos, GateKind kind, std::vector<int> qubits);

  /// Reassigns param slots 0..P-1 in list order; returns new param_count.
  int renumber_params();

  const OpNode* find(int id) const;

  bool operator==(const CircuitDag& other) const;  // structural; ignores node ids
};

struct Topology {
  int n_qubits = 0;
  std::set<std::pair<int, int>> edges;  // normalized first < second

  Topology() = default;
  Topology(int n, std::initializer_list<std::pair<int, int>> e);

  static Topology all_to_all(int n);

  void add_edge(int a, int b);
  bool has_edge(int a, int b) const;
};

enum class DiagnosticCode {
  qubit_out_of_range,
  duplicate_qubit,
  non_edge,
  bad_param_numbering,
};

struct Diagnostic {
  DiagnosticCode code;
  int node_id;  // -1 when not tied to a node
  std::string message;
};

/// Empty result means valid. Throws usage_error on n_qubits mismatch.
std::vector<Diagnostic> validate(const CircuitDag& dag, const Topology& topo);

/// Ops in execution order (list order is a topological order of the
/// wire-precedence relation).
std::vector<OpNode> lower(const CircuitDag& dag);

/// Greedy left-to-right layer count.
int depth(const CircuitDag& dag);

std::string serialize(const CircuitDag& dag);
std::string serialize(const CircuitDag& dag, const Eigen::VectorXd& theta);

struct DeserializedCircuit {
  CircuitDag dag;
  Eigen::VectorXd theta;  // zeros where the file gave no value
};

/// Throws usage_error with position info on malformed input.
DeserializedCircuit deserialize(const std::string& text);

}  // namespace qcnash
