#pragma once

#include <Eigen/Dense>

#include "qcnash/circuit.hpp"
#include "qcnash/pauli.hpp"

namespace qcnash {

/// |0...0> on n qubits. Throws capability_error past kMaxDenseQubits.
Eigen::VectorXcd zero_state(int n_qubits);

/// Applies one gate in place; theta is ignored for parameterless kinds.
void apply_gate(Eigen::VectorXcd& state, GateKind kind, const std::vector<int>& qubits,
                double theta);

/// Applies lower(dag) to |0...0>. Throws usage_error if |theta| != param_count.
Eigen::VectorXcd run(const CircuitDag& dag, const Eigen::VectorXd& theta);

/// sum_k c_k <psi|P_k|psi>, imaginary residue discarded.
double expectation(const Eigen::VectorXcd& state, const PauliSum& h);

/// <P> for all 4^n Pauli words, indexed by word_index. Computed from the
/// rank-1 density matrix with a per-qubit Pauli transform, O(4^n * n).
Eigen::VectorXd pauli_spectrum(const Eigen::VectorXcd& state);

/// d<h>/dtheta_l for every slot, by the parameter-shift rule (two-term for
/// rx/ry/rz/rzz, four-term for double_excitation).
Eigen::VectorXd gradient(const CircuitDag& dag, const Eigen::VectorXd& theta, const PauliSum& h);

/// Quantum Fisher information matrix of run(dag, theta):
/// F_ij = 4 Re(<d_i|d_j> - <d_i|psi><psi|d_j>), derivative states built by
/// inserting each gate's generator.
Eigen::MatrixXd qfim(const CircuitDag& dag, const Eigen::VectorXd& theta);

}  // namespace qcnash
