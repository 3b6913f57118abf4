#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcnash/circuit.hpp"
#include "qcnash/game.hpp"
#include "qcnash/payoffs.hpp"
#include "qcnash/problems.hpp"

namespace qcnash {

enum class InnerObjective { task_only, full_potential_fd };

struct SearchConfig {
  Weights weights;
  double epsilon = 0.05;
  int outer_iters = 15;
  int inner_steps = 100;
  double inner_rate = 0.05;
  double t0 = 1.0;
  double cooling = 0.95;
  int proposals_per_iter = 8;
  std::uint64_t rng_seed = 0;
  InnerObjective inner_objective = InnerObjective::task_only;
  bool delta_weighted = false;
  double deff_tol = 1e-6;
  double two_qubit_weight = 1.0;
  std::vector<GateKind> gate_set = all_gate_kinds();  // kinds the players may introduce
};

struct SeedStrategy {
  enum class Kind { cold, qaoa_p1, from_dag_file, givens };
  Kind kind = Kind::cold;
  std::string path;                             // from_dag_file
  std::vector<int> occupied;                    // givens: qubits prepared in |1>
  std::vector<std::array<int, 4>> quadruples;   // givens: double-excitation supports

  static SeedStrategy cold() { return {}; }
  static SeedStrategy qaoa_p1() { return {Kind::qaoa_p1, {}, {}, {}}; }
  static SeedStrategy from_dag_file(std::string p) { return {Kind::from_dag_file, std::move(p), {}, {}}; }
  static SeedStrategy givens(std::vector<int> occ, std::vector<std::array<int, 4>> quads) {
    return {Kind::givens, {}, std::move(occ), std::move(quads)};
  }
};

enum class SearchStatus { converged_epsilon_nash, budget_exhausted };

struct Snapshot {
  CircuitDag dag;
  Eigen::VectorXd theta;
};

struct IterationRecord {
  int iter = 0;
  std::optional<PlayerId> active_player;  // empty for the baseline (union proposals)
  double phi_current = 0.0;
  double phi_best = 0.0;
  PayoffVector payoffs;                   // of the circuit after this iteration
  std::array<double, 4> delta_per_player{};
  double delta_max = 0.0;
  bool accepted = false;
  std::string move;                       // best candidate this iteration; empty if none
  int snapshot_id = 0;                    // index into SearchTrace::snapshots
};

struct SearchTrace {
  std::vector<IterationRecord> records;
  std::vector<Snapshot> snapshots;  // snapshot 0 is the (polished) seed
  CircuitDag final_dag;
  Eigen::VectorXd final_theta;
  double final_phi = 0.0;
  PayoffVector final_payoffs;
  NashResidual final_residual;
  CircuitDag best_dag;
  Eigen::VectorXd best_theta;
  double best_phi = 0.0;
  SearchStatus status = SearchStatus::budget_exhausted;
};

GameContext make_context(const Problem& problem, const Topology& topology,
                         const SearchConfig& cfg);

/// Seed circuits: cold = h on every qubit; qaoa_p1 = h layer, rzz per
/// topology-legal ZZ bond of the Hamiltonian, rx per qubit, all angles 0.01;
/// givens = x on occupied qubits plus zero-angle double excitations;
/// from_dag_file = deserialize. The result must validate against the
/// topology.
std::pair<CircuitDag, Eigen::VectorXd> make_seed(const SeedStrategy& strategy,
                                                 const Problem& problem,
                                                 const Topology& topology);

/// Gradient ascent on the inner objective (task term by default, finite
/// difference full potential optionally); returns the best theta seen.
Eigen::VectorXd inner_gd(const CircuitDag& dag, const Eigen::VectorXd& theta0,
                         const Problem& problem, const SearchConfig& cfg);

/// Outer annealing over the active player's sampled moves, inner gradient
/// ascent per candidate, Metropolis acceptance on the potential, stopping
/// when the Nash residual falls to epsilon or the budget runs out.
SearchTrace nash_search(const Problem& problem, const Topology& topology,
                        const SearchConfig& cfg, const SeedStrategy& seed);

/// Same loop, but proposals come from the union of all four action sets and
/// only the budget stops it; residuals are still recorded.
SearchTrace baseline_sa(const Problem& problem, const Topology& topology,
                        const SearchConfig& cfg, const SeedStrategy& seed);

struct FrontierPoint {
  Weights weights;
  double m2_per_n = 0.0;
  double task_value = 0.0;
  double phi = 0.0;
  CircuitDag dag;
  Eigen::VectorXd theta;
};

/// nash_search per corner, best of the rng seeds by potential.
std::vector<FrontierPoint> weight_sweep(const Problem& problem, const Topology& topology,
                                        const std::vector<Weights>& corners,
                                        const SearchConfig& cfg, const SeedStrategy& seed,
                                        const std::vector<std::uint64_t>& rng_seeds);

enum class ParetoSense { maximize, minimize };

/// keep[i] is false iff some other point is >= in both sense-adjusted
/// coordinates and > in at least one.
std::vector<bool> pareto_mask(const std::vector<std::array<double, 2>>& points,
                              std::array<ParetoSense, 2> senses);

/// Non-dominated subset of (m2_per_n, task_value), both maximized, in stable
/// order.
std::vector<FrontierPoint> pareto_front(const std::vector<FrontierPoint>& points);

}  // namespace qcnash
