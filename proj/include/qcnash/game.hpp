#pragma once

#include <Eigen/Dense>
#include <array>
#include <string>
#include <variant>
#include <vector>

#include "qcnash/circuit.hpp"
#include "qcnash/payoffs.hpp"
#include "qcnash/problems.hpp"

namespace qcnash {

enum class PlayerId { Trainability, Magic, Task, Hardware };

inline constexpr std::array<PlayerId, 4> kAllPlayers = {
    PlayerId::Trainability, PlayerId::Magic, PlayerId::Task, PlayerId::Hardware};

std::string_view player_name(PlayerId p);

// Structural edits. Appends go at insert_position, or at the end when it is
// negative (the only position the players generate).
struct AppendMove {
  GateKind kind = GateKind::h;
  std::vector<int> qubits;
  int insert_position = -1;
  bool operator==(const AppendMove&) const = default;
};
struct RemoveMove {
  int node_id = 0;
  bool operator==(const RemoveMove&) const = default;
};
struct RetypeMove {
  int node_id = 0;
  GateKind new_kind = GateKind::h;
  bool operator==(const RetypeMove&) const = default;
};
struct RewireMove {
  int node_id = 0;
  std::vector<int> new_qubits;
  bool operator==(const RewireMove&) const = default;
};

using Move = std::variant<AppendMove, RemoveMove, RetypeMove, RewireMove>;

std::string describe(const Move& move);

struct GameContext {
  Problem problem;
  Topology topology;
  Weights weights;
  std::vector<GateKind> allowed = all_gate_kinds();
  double deff_tol = 1e-6;
  double two_qubit_weight = 1.0;
  bool weighted_delta = false;
};

/// The player's restricted action set on this dag. Trainability: retype to a
/// parameterized kind of equal arity, or append any parameterized gate.
/// Magic: retype to a non-Clifford kind of equal arity, or append t/tdg.
/// Task: rewire a 2-qubit node to another topology edge. Hardware: remove a
/// node. No-ops and validity-breaking moves are excluded; kinds outside
/// ctx.allowed are never introduced.
std::vector<Move> actions(PlayerId player, const CircuitDag& dag, const GameContext& ctx);

struct EditedCircuit {
  CircuitDag dag;
  Eigen::VectorXd theta;
};

/// Applies the edit; surviving parameters keep their values (matched by node),
/// new ones start at 0. Throws usage_error when the move names a node that is
/// no longer present.
EditedCircuit apply_move(const CircuitDag& dag, const Eigen::VectorXd& theta, const Move& move);

PayoffVector evaluate_payoffs(const CircuitDag& dag, const Eigen::VectorXd& theta,
                              const GameContext& ctx);

/// u = (f1, f2, f3, -f4) per player, unweighted.
double utility(PlayerId player, const CircuitDag& dag, const Eigen::VectorXd& theta,
               const GameContext& ctx);

/// max over the player's actions of the utility gain, clamped at 0; theta is
/// held fixed with new parameters at 0. Scaled by the player's weight when
/// ctx.weighted_delta is set.
double best_response_gap(PlayerId player, const CircuitDag& dag, const Eigen::VectorXd& theta,
                         const GameContext& ctx);

struct NashResidual {
  double delta_max = 0.0;
  std::array<double, 4> per_player{};  // indexed like kAllPlayers
};

NashResidual nash_residual(const CircuitDag& dag, const Eigen::VectorXd& theta,
                           const GameContext& ctx);

}  // namespace qcnash
