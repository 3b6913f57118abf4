#include "qcnash/payoffs.hpp"

#include <cmath>

#include "qcnash/simulator.hpp"

namespace qcnash {

double eff_dim(const CircuitDag& dag, const Eigen::VectorXd& theta, double tol) {
  if (dag.param_count == 0) return 0.0;
  const Eigen::MatrixXd f = qfim(dag, theta);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(f, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = es.eigenvalues();
  const double cutoff = tol * std::max(1.0, ev[ev.size() - 1]);
  int count = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev[i] > cutoff) ++count;
  }
  return count;
}

double magic_m2(const Eigen::VectorXcd& state) {
  const double norm = state.norm();
  if (std::abs(norm - 1.0) > 1e-8) {
    throw std::invalid_argument("magic_m2 needs a normalized state, got norm " +
                                std::to_string(norm));
  }
  const Eigen::VectorXd spec = pauli_spectrum(state);
  int n = 0;
  while ((Eigen::Index{1} << (2 * n)) < spec.size()) ++n;
  double sum = 0.0;
  for (Eigen::Index i = 0; i < spec.size(); ++i) {
    const double sq = spec[i] * spec[i];
    sum += sq * sq;
  }
  double m2 = -std::log2(sum / static_cast<double>(Eigen::Index{1} << n));
  if (m2 < 0.0 && m2 > -1e-9) m2 = 0.0;
  return m2;
}

double task_payoff(const Eigen::VectorXcd& state, const PauliSum& h, TaskSense sense) {
  const double e = expectation(state, h);
  return sense == TaskSense::maximize_expectation ? e : -e;
}

double hardware_cost(const CircuitDag& dag, double two_qubit_weight) {
  double cost = 0.0;
  for (const auto& op : dag.ops) {
    cost += gate_arity(op.kind) == 1 ? 1.0 : two_qubit_weight;
  }
  return cost;
}

double potential(const PayoffVector& p, const Weights& w) {
  return w.w1 * p.f1 + w.w2 * p.f2 + w.w3 * p.f3 - w.w4 * p.f4;
}

}  // namespace qcnash
