#pragma once

#include <Eigen/Dense>
#include <set>
#include <string>
#include <utility>

#include "qcnash/circuit.hpp"
#include "qcnash/pauli.hpp"
#include "qcnash/payoffs.hpp"

namespace qcnash {

struct Graph {
  int n_vertices = 0;
  std::set<std::pair<int, int>> edges;  // normalized first < second

  Graph() = default;
  Graph(int n, std::initializer_list<std::pair<int, int>> e);

  static Graph complete(int n);

  void add_edge(int a, int b);
};

struct Problem {
  PauliSum hamiltonian;
  TaskSense sense = TaskSense::maximize_expectation;
  std::string label;

  int n_qubits() const { return hamiltonian.n_qubits; }
};

/// H = sum_{(i,j) in E} (1 - Z_i Z_j)/2; expectation on a basis state is the
/// cut size of the induced bipartition.
Problem maxcut_problem(const Graph& g);

/// H = -sum_i Z_i Z_{i+1} - g sum_i X_i with periodic bonds (deduplicated, so
/// n=2 has a single bond). Throws usage_error for n < 2.
Problem tfim_problem(int n, double g);

/// Lines of "<coefficient> <word>"; '#' starts a comment. Throws usage_error
/// with a line number on malformed input.
PauliSum parse_pauli_file(const std::string& text);

/// Inverse of parse_pauli_file on canonical sums.
std::string format_pauli_sum(const PauliSum& h);

struct GroundSolution {
  double energy = 0.0;
  Eigen::VectorXcd state;
};

/// Dense diagonalization; throws capability_error past kMaxDenseQubits.
GroundSolution exact_ground_energy(const PauliSum& h);

/// heavy_hex4 (4-qubit path), grid2x2 (4-cycle), all_to_all (complete on
/// n_qubits). The named 4-qubit layouts require n_qubits = 4.
Topology builtin_topology(const std::string& name, int n_qubits);

}  // namespace qcnash
