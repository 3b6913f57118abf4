#pragma once

#include <Eigen/Dense>

#include "qcnash/circuit.hpp"
#include "qcnash/pauli.hpp"

namespace qcnash {

struct Weights {
  double w1 = 1.0;  // trainability
  double w2 = 1.0;  // magic
  double w3 = 1.0;  // task
  double w4 = 1.0;  // hardware cost (subtracted)
};

struct PayoffVector {
  double f1 = 0.0;  // effective dimension
  double f2 = 0.0;  // M2 / n
  double f3 = 0.0;  // signed task value
  double f4 = 0.0;  // hardware cost
};

enum class TaskSense { maximize_expectation, minimize_expectation };

/// Count of QFIM eigenvalues above tol * max(1, lambda_max).
double eff_dim(const CircuitDag& dag, const Eigen::VectorXd& theta, double tol = 1e-6);

/// Stabilizer Renyi-2 entropy -log2(2^-n sum_P <P>^4); 0 on stabilizer
/// states, clamped at 0 against rounding. Throws if the state is not
/// normalized (norm off by more than 1e-8).
double magic_m2(const Eigen::VectorXcd& state);

/// +<h> when maximizing, -<h> when minimizing.
double task_payoff(const Eigen::VectorXcd& state, const PauliSum& h, TaskSense sense);

/// Gate count; multi-qubit ops scaled by two_qubit_weight.
double hardware_cost(const CircuitDag& dag, double two_qubit_weight = 1.0);

/// w1*f1 + w2*f2 + w3*f3 - w4*f4.
double potential(const PayoffVector& p, const Weights& w);

}  // namespace qcnash
