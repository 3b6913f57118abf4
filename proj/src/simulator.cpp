#include "qcnash/simulator.hpp"

#include <cmath>
#include <numbers>

#include "qcnash/common.hpp"

namespace qcnash {

namespace {

using Idx = Eigen::Index;

void apply_1q(Eigen::VectorXcd& state, int q, const Complex u[2][2]) {
  const std::size_t bit = std::size_t{1} << q;
  const std::size_t dim = static_cast<std::size_t>(state.size());
  for (std::size_t b = 0; b < dim; ++b) {
    if (b & bit) continue;
    const Complex a0 = state[static_cast<Idx>(b)];
    const Complex a1 = state[static_cast<Idx>(b | bit)];
    state[static_cast<Idx>(b)] = u[0][0] * a0 + u[0][1] * a1;
    state[static_cast<Idx>(b | bit)] = u[1][0] * a0 + u[1][1] * a1;
  }
}

// Rotation of the |0011>/|1100> plane of four ordered qubits: the first two
// listed qubits carry the "11" of |1100>, the last two that of |0011>.
void apply_double_excitation(Eigen::VectorXcd& state, const std::vector<int>& qubits,
                             double theta) {
  const std::size_t ab = (std::size_t{1} << qubits[0]) | (std::size_t{1} << qubits[1]);
  const std::size_t cd = (std::size_t{1} << qubits[2]) | (std::size_t{1} << qubits[3]);
  const std::size_t all = ab | cd;
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  const std::size_t dim = static_cast<std::size_t>(state.size());
  for (std::size_t b = 0; b < dim; ++b) {
    if ((b & all) != cd) continue;  // b realizes |0011>, b ^ all realizes |1100>
    const Complex a0011 = state[static_cast<Idx>(b)];
    const Complex a1100 = state[static_cast<Idx>(b ^ all)];
    state[static_cast<Idx>(b)] = c * a0011 - s * a1100;
    state[static_cast<Idx>(b ^ all)] = s * a0011 + c * a1100;
  }
}

// (-i G) |state> for the generator G of exp(-i theta G) gates; used for
// derivative states.
Eigen::VectorXcd apply_generator(const Eigen::VectorXcd& state, GateKind kind,
                                 const std::vector<int>& qubits) {
  const std::size_t dim = static_cast<std::size_t>(state.size());
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(state.size());
  const Complex mihalf{0.0, -0.5};  // -i/2
  switch (kind) {
    case GateKind::rx: {
      const std::size_t bit = std::size_t{1} << qubits[0];
      for (std::size_t b = 0; b < dim; ++b) {
        out[static_cast<Idx>(b)] = mihalf * state[static_cast<Idx>(b ^ bit)];
      }
      break;
    }
    case GateKind::ry: {
      const std::size_t bit = std::size_t{1} << qubits[0];
      for (std::size_t b = 0; b < dim; ++b) {
        const double sign = (b & bit) ? 0.5 : -0.5;
        out[static_cast<Idx>(b)] = sign * state[static_cast<Idx>(b ^ bit)];
      }
      break;
    }
    case GateKind::rz: {
      const std::size_t bit = std::size_t{1} << qubits[0];
      for (std::size_t b = 0; b < dim; ++b) {
        out[static_cast<Idx>(b)] = ((b & bit) ? -mihalf : mihalf) * state[static_cast<Idx>(b)];
      }
      break;
    }
    case GateKind::rzz: {
      const std::size_t b0 = std::size_t{1} << qubits[0];
      const std::size_t b1 = std::size_t{1} << qubits[1];
      for (std::size_t b = 0; b < dim; ++b) {
        const bool odd = static_cast<bool>(b & b0) != static_cast<bool>(b & b1);
        out[static_cast<Idx>(b)] = (odd ? -mihalf : mihalf) * state[static_cast<Idx>(b)];
      }
      break;
    }
    case GateKind::double_excitation: {
      const std::size_t ab = (std::size_t{1} << qubits[0]) | (std::size_t{1} << qubits[1]);
      const std::size_t cd = (std::size_t{1} << qubits[2]) | (std::size_t{1} << qubits[3]);
      const std::size_t all = ab | cd;
      for (std::size_t b = 0; b < dim; ++b) {
        if ((b & all) != cd) continue;
        out[static_cast<Idx>(b)] = -0.5 * state[static_cast<Idx>(b ^ all)];
        out[static_cast<Idx>(b ^ all)] = 0.5 * state[static_cast<Idx>(b)];
      }
      break;
    }
    default:
      throw std::invalid_argument("gate " + std::string(gate_name(kind)) + " has no generator");
  }
  return out;
}

}  // namespace

Eigen::VectorXcd zero_state(int n_qubits) {
  if (n_qubits < 0) throw std::invalid_argument("negative qubit count");
  if (n_qubits > kMaxDenseQubits) {
    throw capability_error("dense backend supports at most " + std::to_string(kMaxDenseQubits) +
                           " qubits, got " + std::to_string(n_qubits));
  }
  Eigen::VectorXcd state = Eigen::VectorXcd::Zero(Idx{1} << n_qubits);
  state[0] = Complex{1.0, 0.0};
  return state;
}

void apply_gate(Eigen::VectorXcd& state, GateKind kind, const std::vector<int>& qubits,
                double theta) {
  static const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  const std::size_t dim = static_cast<std::size_t>(state.size());
  switch (kind) {
    case GateKind::h: {
      const Complex u[2][2] = {{inv_sqrt2, inv_sqrt2}, {inv_sqrt2, -inv_sqrt2}};
      apply_1q(state, qubits[0], u);
      break;
    }
    case GateKind::x: {
      const Complex u[2][2] = {{0.0, 1.0}, {1.0, 0.0}};
      apply_1q(state, qubits[0], u);
      break;
    }
    case GateKind::y: {
      const Complex u[2][2] = {{0.0, Complex{0, -1}}, {Complex{0, 1}, 0.0}};
      apply_1q(state, qubits[0], u);
      break;
    }
    case GateKind::z: {
      const Complex u[2][2] = {{1.0, 0.0}, {0.0, -1.0}};
      apply_1q(state, qubits[0], u);
      break;
    }
    case GateKind::s: {
      const Complex u[2][2] = {{1.0, 0.0}, {0.0, Complex{0, 1}}};
      apply_1q(state, qubits[0], u);
      break;
    }
    case GateKind::t: {
      const Complex u[2][2] = {{1.0, 0.0}, {0.0, Complex{inv_sqrt2, inv_sqrt2}}};
      apply_1q(state, qubits[0], u);
      break;
    }
    case GateKind::tdg: {
      const Complex u[2][2] = {{1.0, 0.0}, {0.0, Complex{inv_sqrt2, -inv_sqrt2}}};
      apply_1q(state, qubits[0], u);
      break;
    }
    case GateKind::rx: {
      const double c = std::cos(theta / 2), s = std::sin(theta / 2);
      const Complex u[2][2] = {{c, Complex{0, -s}}, {Complex{0, -s}, c}};
      apply_1q(state, qubits[0], u);
      break;
    }
    case GateKind::ry: {
      const double c = std::cos(theta / 2), s = std::sin(theta / 2);
      const Complex u[2][2] = {{c, -s}, {s, c}};
      apply_1q(state, qubits[0], u);
      break;
    }
    case GateKind::rz: {
      const Complex em{std::cos(theta / 2), -std::sin(theta / 2)};
      const Complex u[2][2] = {{em, 0.0}, {0.0, std::conj(em)}};
      apply_1q(state, qubits[0], u);
      break;
    }
    case GateKind::rzz: {
      // exp(-i theta/2) on aligned bits, exp(+i theta/2) on anti-aligned
      const Complex em{std::cos(theta / 2), -std::sin(theta / 2)};
      const Complex ep = std::conj(em);
      const std::size_t b0 = std::size_t{1} << qubits[0];
      const std::size_t b1 = std::size_t{1} << qubits[1];
      for (std::size_t b = 0; b < dim; ++b) {
        const bool odd = static_cast<bool>(b & b0) != static_cast<bool>(b & b1);
        state[static_cast<Idx>(b)] *= odd ? ep : em;
      }
      break;
    }
    case GateKind::cnot: {
      const std::size_t ctrl = std::size_t{1} << qubits[0];
      const std::size_t tgt = std::size_t{1} << qubits[1];
      for (std::size_t b = 0; b < dim; ++b) {
        if ((b & ctrl) && !(b & tgt)) {
          std::swap(state[static_cast<Idx>(b)], state[static_cast<Idx>(b | tgt)]);
        }
      }
      break;
    }
    case GateKind::cz: {
      const std::size_t mask =
          (std::size_t{1} << qubits[0]) | (std::size_t{1} << qubits[1]);
      for (std::size_t b = 0; b < dim; ++b) {
        if ((b & mask) == mask) state[static_cast<Idx>(b)] = -state[static_cast<Idx>(b)];
      }
      break;
    }
    case GateKind::double_excitation:
      apply_double_excitation(state, qubits, theta);
      break;
  }
}

Eigen::VectorXcd run(const CircuitDag& dag, const Eigen::VectorXd& theta) {
  if (theta.size() != dag.param_count) {
    throw usage_error("theta has " + std::to_string(theta.size()) + " entries but circuit has " +
                      std::to_string(dag.param_count) + " parameters");
  }
  Eigen::VectorXcd state = zero_state(dag.n_qubits);
  for (const auto& op : lower(dag)) {
    apply_gate(state, op.kind, op.qubits, op.param_slot ? theta[*op.param_slot] : 0.0);
  }
  return state;
}

double expectation(const Eigen::VectorXcd& state, const PauliSum& h) {
  if ((Idx{1} << h.n_qubits) != state.size()) {
    throw usage_error("state dimension " + std::to_string(state.size()) +
                      " does not match a " + std::to_string(h.n_qubits) + "-qubit operator");
  }
  Complex acc{0.0, 0.0};
  for (const auto& term : h.terms) {
    acc += term.coefficient * state.dot(apply_pauli_word(term.word, state));
  }
  return acc.real();
}

Eigen::VectorXd pauli_spectrum(const Eigen::VectorXcd& state) {
  const std::size_t dim = static_cast<std::size_t>(state.size());
  int n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  if ((std::size_t{1} << n) != dim) throw std::invalid_argument("state size not a power of two");
  if (n > kMaxDenseQubits) {
    throw capability_error("pauli_spectrum supports at most " +
                           std::to_string(kMaxDenseQubits) + " qubits, got " +
                           std::to_string(n));
  }

  // Density-matrix entries laid out with row bit r_q at 2q and column bit c_q
  // at 2q+1, so the per-qubit transform below lands <P> at word_index(P).
  std::vector<std::size_t> spread(dim, 0);
  for (std::size_t v = 0; v < dim; ++v) {
    std::size_t m = 0;
    for (int q = 0; q < n; ++q) m |= ((v >> q) & 1) << (2 * q);
    spread[v] = m;
  }
  const std::size_t total = std::size_t{1} << (2 * n);
  std::vector<Complex> buf(total);
  for (std::size_t r = 0; r < dim; ++r) {
    const Complex ar = state[static_cast<Idx>(r)];
    for (std::size_t c = 0; c < dim; ++c) {
      buf[spread[r] | (spread[c] << 1)] = ar * std::conj(state[static_cast<Idx>(c)]);
    }
  }

  // Per qubit: (rho_00, rho_10, rho_01, rho_11) -> (tr rho I, tr rho X, tr rho Y, tr rho Z)
  const Complex iu{0.0, 1.0};
  for (int q = 0; q < n; ++q) {
    const std::size_t lo = std::size_t{1} << (2 * q);
    const std::size_t hi = lo << 1;
    for (std::size_t m = 0; m < total; ++m) {
      if (m & (lo | hi)) continue;
      const Complex v0 = buf[m];
      const Complex v1 = buf[m | lo];
      const Complex v2 = buf[m | hi];
      const Complex v3 = buf[m | lo | hi];
      buf[m] = v0 + v3;
      buf[m | lo] = v1 + v2;
      buf[m | hi] = iu * (v2 - v1);
      buf[m | lo | hi] = v0 - v3;
    }
  }

  Eigen::VectorXd out(static_cast<Idx>(total));
  for (std::size_t m = 0; m < total; ++m) out[static_cast<Idx>(m)] = buf[m].real();
  return out;
}

Eigen::VectorXd gradient(const CircuitDag& dag, const Eigen::VectorXd& theta, const PauliSum& h) {
  if (theta.size() != dag.param_count) {
    throw usage_error("theta has " + std::to_string(theta.size()) + " entries but circuit has " +
                      std::to_string(dag.param_count) + " parameters");
  }
  if (h.n_qubits != dag.n_qubits) {
    throw usage_error("operator acts on " + std::to_string(h.n_qubits) +
                      " qubits but circuit has " + std::to_string(dag.n_qubits));
  }
  std::vector<GateKind> slot_kind(static_cast<std::size_t>(dag.param_count));
  for (const auto& op : dag.ops) {
    if (op.param_slot) slot_kind[static_cast<std::size_t>(*op.param_slot)] = op.kind;
  }
  const double half_pi = std::numbers::pi / 2;
  auto energy_at = [&](int slot, double shift) {
    Eigen::VectorXd shifted = theta;
    shifted[slot] += shift;
    return expectation(run(dag, shifted), h);
  };
  Eigen::VectorXd grad(dag.param_count);
  for (int l = 0; l < dag.param_count; ++l) {
    if (slot_kind[static_cast<std::size_t>(l)] == GateKind::double_excitation) {
      // four-term shift for the {1/2, 1} generator gap structure
      const double a = (std::numbers::sqrt2 + 1.0) / (4.0 * std::numbers::sqrt2);
      const double b = (std::numbers::sqrt2 - 1.0) / (4.0 * std::numbers::sqrt2);
      grad[l] = a * (energy_at(l, half_pi) - energy_at(l, -half_pi)) -
                b * (energy_at(l, 3 * half_pi) - energy_at(l, -3 * half_pi));
    } else {
      grad[l] = 0.5 * (energy_at(l, half_pi) - energy_at(l, -half_pi));
    }
  }
  return grad;
}

Eigen::MatrixXd qfim(const CircuitDag& dag, const Eigen::VectorXd& theta) {
  if (theta.size() != dag.param_count) {
    throw usage_error("theta has " + std::to_string(theta.size()) + " entries but circuit has " +
                      std::to_string(dag.param_count) + " parameters");
  }
  const int P = dag.param_count;
  Eigen::VectorXcd psi = zero_state(dag.n_qubits);
  std::vector<Eigen::VectorXcd> deriv(static_cast<std::size_t>(P));
  for (const auto& op : lower(dag)) {
    const double th = op.param_slot ? theta[*op.param_slot] : 0.0;
    apply_gate(psi, op.kind, op.qubits, th);
    for (auto& d : deriv) {
      if (d.size() > 0) apply_gate(d, op.kind, op.qubits, th);
    }
    if (op.param_slot) {
      deriv[static_cast<std::size_t>(*op.param_slot)] = apply_generator(psi, op.kind, op.qubits);
    }
  }
  Eigen::VectorXcd overlap(P);  // <psi|d_k>
  for (int k = 0; k < P; ++k) overlap[k] = psi.dot(deriv[static_cast<std::size_t>(k)]);
  Eigen::MatrixXd f(P, P);
  for (int i = 0; i < P; ++i) {
    for (int j = 0; j < P; ++j) {
      const Complex dd = deriv[static_cast<std::size_t>(i)].dot(deriv[static_cast<std::size_t>(j)]);
      f(i, j) = 4.0 * (dd - std::conj(overlap[i]) * overlap[j]).real();
    }
  }
  return f;
}

}  // namespace qcnash
