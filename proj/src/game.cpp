#include "qcnash/game.hpp"

#include <algorithm>
#include <map>

#include "qcnash/common.hpp"
#include "qcnash/simulator.hpp"

namespace qcnash {

namespace {

std::string qubit_list(const std::vector<int>& qs) {
  std::string out = "[";
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(qs[i]);
  }
  return out + "]";
}

bool kind_allowed(const GameContext& ctx, GateKind k) {
  return std::find(ctx.allowed.begin(), ctx.allowed.end(), k) != ctx.allowed.end();
}

void retype_into(std::vector<Move>& out, const OpNode& node, const GameContext& ctx,
                 std::initializer_list<GateKind> targets) {
  for (GateKind k : targets) {
    if (k == node.kind || !kind_allowed(ctx, k)) continue;
    out.push_back(RetypeMove{node.id, k});
  }
}

void append_parameterized(std::vector<Move>& out, const CircuitDag& dag, const GameContext& ctx) {
  for (GateKind k : {GateKind::rx, GateKind::ry, GateKind::rz}) {
    if (!kind_allowed(ctx, k)) continue;
    for (int q = 0; q < dag.n_qubits; ++q) out.push_back(AppendMove{k, {q}});
  }
  if (kind_allowed(ctx, GateKind::rzz)) {
    for (const auto& [a, b] : ctx.topology.edges) out.push_back(AppendMove{GateKind::rzz, {a, b}});
  }
  if (kind_allowed(ctx, GateKind::double_excitation)) {
    const auto& topo = ctx.topology;
    for (int p0 = 0; p0 < dag.n_qubits; ++p0) {
      for (int p1 = p0 + 1; p1 < dag.n_qubits; ++p1) {
        for (int p2 = p1 + 1; p2 < dag.n_qubits; ++p2) {
          for (int p3 = p2 + 1; p3 < dag.n_qubits; ++p3) {
            const int qs[4] = {p0, p1, p2, p3};
            bool coupled = true;
            for (int i = 0; i < 4 && coupled; ++i) {
              for (int j = i + 1; j < 4; ++j) {
                if (!topo.has_edge(qs[i], qs[j])) {
                  coupled = false;
                  break;
                }
              }
            }
            if (!coupled) continue;
            // the three pairings of the quadruple; order within a pair and
            // swapping the pairs only flip the rotation sign
            out.push_back(AppendMove{GateKind::double_excitation, {p0, p1, p2, p3}});
            out.push_back(AppendMove{GateKind::double_excitation, {p0, p2, p1, p3}});
            out.push_back(AppendMove{GateKind::double_excitation, {p0, p3, p1, p2}});
          }
        }
      }
    }
  }
}

}  // namespace

std::string_view player_name(PlayerId p) {
  switch (p) {
    case PlayerId::Trainability: return "trainability";
    case PlayerId::Magic: return "magic";
    case PlayerId::Task: return "task";
    case PlayerId::Hardware: return "hardware";
  }
  return "?";
}

std::string describe(const Move& move) {
  if (const auto* m = std::get_if<AppendMove>(&move)) {
    return "append " + std::string(gate_name(m->kind)) + "@" + qubit_list(m->qubits);
  }
  if (const auto* m = std::get_if<RemoveMove>(&move)) {
    return "remove node " + std::to_string(m->node_id);
  }
  if (const auto* m = std::get_if<RetypeMove>(&move)) {
    return "retype node " + std::to_string(m->node_id) + " -> " +
           std::string(gate_name(m->new_kind));
  }
  const auto& m = std::get<RewireMove>(move);
  return "rewire node " + std::to_string(m.node_id) + " -> " + qubit_list(m.new_qubits);
}

std::vector<Move> actions(PlayerId player, const CircuitDag& dag, const GameContext& ctx) {
  std::vector<Move> out;
  switch (player) {
    case PlayerId::Trainability:
      for (const auto& node : dag.ops) {
        if (gate_arity(node.kind) == 1) {
          retype_into(out, node, ctx, {GateKind::rx, GateKind::ry, GateKind::rz});
        } else if (gate_arity(node.kind) == 2) {
          retype_into(out, node, ctx, {GateKind::rzz});
        }
      }
      append_parameterized(out, dag, ctx);
      break;
    case PlayerId::Magic:
      for (const auto& node : dag.ops) {
        if (gate_arity(node.kind) == 1) {
          retype_into(out, node, ctx,
                      {GateKind::t, GateKind::tdg, GateKind::rx, GateKind::ry, GateKind::rz});
        } else if (gate_arity(node.kind) == 2) {
          retype_into(out, node, ctx, {GateKind::rzz});
        }
      }
      for (GateKind k : {GateKind::t, GateKind::tdg}) {
        if (!kind_allowed(ctx, k)) continue;
        for (int q = 0; q < dag.n_qubits; ++q) out.push_back(AppendMove{k, {q}});
      }
      break;
    case PlayerId::Task:
      for (const auto& node : dag.ops) {
        if (gate_arity(node.kind) != 2) continue;
        const int lo = std::min(node.qubits[0], node.qubits[1]);
        const int hi = std::max(node.qubits[0], node.qubits[1]);
        for (const auto& [a, b] : ctx.topology.edges) {
          if (a == lo && b == hi) continue;
          out.push_back(RewireMove{node.id, {a, b}});
        }
      }
      break;
    case PlayerId::Hardware:
      for (const auto& node : dag.ops) out.push_back(RemoveMove{node.id});
      break;
  }
  return out;
}

EditedCircuit apply_move(const CircuitDag& dag, const Eigen::VectorXd& theta, const Move& move) {
  if (theta.size() != dag.param_count) {
    throw usage_error("theta has " + std::to_string(theta.size()) + " entries but circuit has " +
                      std::to_string(dag.param_count) + " parameters");
  }
  std::map<int, double> value_of_node;
  for (const auto& op : dag.ops) {
    if (op.param_slot) value_of_node[op.id] = theta[*op.param_slot];
  }

  EditedCircuit out;
  out.dag = dag;
  auto locate = [&](int node_id) -> std::size_t {
    for (std::size_t i = 0; i < out.dag.ops.size(); ++i) {
      if (out.dag.ops[i].id == node_id) return i;
    }
    throw usage_error("stale move: node " + std::to_string(node_id) + " is not in the circuit");
  };

  if (const auto* m = std::get_if<AppendMove>(&move)) {
    const std::size_t pos =
        m->insert_position < 0 ? out.dag.ops.size() : static_cast<std::size_t>(m->insert_position);
    out.dag.insert_op(pos, m->kind, m->qubits);
  } else if (const auto* m = std::get_if<RemoveMove>(&move)) {
    const std::size_t i = locate(m->node_id);
    out.dag.ops.erase(out.dag.ops.begin() + static_cast<std::ptrdiff_t>(i));
  } else if (const auto* m = std::get_if<RetypeMove>(&move)) {
    const std::size_t i = locate(m->node_id);
    if (gate_arity(m->new_kind) != gate_arity(out.dag.ops[i].kind)) {
      throw std::invalid_argument("retype changes arity");
    }
    out.dag.ops[i].kind = m->new_kind;
  } else {
    const auto& rw = std::get<RewireMove>(move);
    const std::size_t i = locate(rw.node_id);
    if (gate_arity(out.dag.ops[i].kind) != 2 || rw.new_qubits.size() != 2 ||
        rw.new_qubits[0] == rw.new_qubits[1]) {
      throw std::invalid_argument("rewire needs a 2-qubit node and two distinct qubits");
    }
    for (int q : rw.new_qubits) {
      if (q < 0 || q >= out.dag.n_qubits) throw std::invalid_argument("rewire qubit out of range");
    }
    out.dag.ops[i].qubits = rw.new_qubits;
  }

  out.dag.renumber_params();
  out.theta.resize(out.dag.param_count);
  for (const auto& op : out.dag.ops) {
    if (!op.param_slot) continue;
    const auto it = value_of_node.find(op.id);
    out.theta[*op.param_slot] = it == value_of_node.end() ? 0.0 : it->second;
  }
  return out;
}

PayoffVector evaluate_payoffs(const CircuitDag& dag, const Eigen::VectorXd& theta,
                              const GameContext& ctx) {
  const Eigen::VectorXcd state = run(dag, theta);
  PayoffVector p;
  p.f1 = eff_dim(dag, theta, ctx.deff_tol);
  p.f2 = magic_m2(state) / dag.n_qubits;
  p.f3 = task_payoff(state, ctx.problem.hamiltonian, ctx.problem.sense);
  p.f4 = hardware_cost(dag, ctx.two_qubit_weight);
  return p;
}

double utility(PlayerId player, const CircuitDag& dag, const Eigen::VectorXd& theta,
               const GameContext& ctx) {
  switch (player) {
    case PlayerId::Trainability:
      return eff_dim(dag, theta, ctx.deff_tol);
    case PlayerId::Magic:
      return magic_m2(run(dag, theta)) / dag.n_qubits;
    case PlayerId::Task:
      return task_payoff(run(dag, theta), ctx.problem.hamiltonian, ctx.problem.sense);
    case PlayerId::Hardware:
      return -hardware_cost(dag, ctx.two_qubit_weight);
  }
  return 0.0;
}

namespace {

double player_weight(PlayerId p, const Weights& w) {
  switch (p) {
    case PlayerId::Trainability: return w.w1;
    case PlayerId::Magic: return w.w2;
    case PlayerId::Task: return w.w3;
    case PlayerId::Hardware: return w.w4;
  }
  return 0.0;
}

}  // namespace

double best_response_gap(PlayerId player, const CircuitDag& dag, const Eigen::VectorXd& theta,
                         const GameContext& ctx) {
  const double base = utility(player, dag, theta, ctx);
  double gap = 0.0;
  for (const Move& move : actions(player, dag, ctx)) {
    const EditedCircuit edited = apply_move(dag, theta, move);
    gap = std::max(gap, utility(player, edited.dag, edited.theta, ctx) - base);
  }
  if (ctx.weighted_delta) gap *= player_weight(player, ctx.weights);
  return gap;
}

NashResidual nash_residual(const CircuitDag& dag, const Eigen::VectorXd& theta,
                           const GameContext& ctx) {
  NashResidual out;
  for (std::size_t i = 0; i < kAllPlayers.size(); ++i) {
    out.per_player[i] = best_response_gap(kAllPlayers[i], dag, theta, ctx);
    out.delta_max = std::max(out.delta_max, out.per_player[i]);
  }
  return out;
}

}  // namespace qcnash
