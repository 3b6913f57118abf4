#include "qcnash/search.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "qcnash/common.hpp"
#include "qcnash/rng.hpp"
#include "qcnash/simulator.hpp"

namespace qcnash {

namespace {

void check_config(const SearchConfig& cfg) {
  if (cfg.epsilon < 0) throw usage_error("epsilon must be >= 0");
  if (cfg.outer_iters < 0) throw usage_error("outer_iters must be >= 0");
  if (cfg.inner_steps < 0) throw usage_error("inner_steps must be >= 0");
  if (cfg.inner_rate <= 0) throw usage_error("inner_rate must be > 0");
  if (cfg.t0 <= 0) throw usage_error("t0 must be > 0");
  if (cfg.cooling <= 0 || cfg.cooling > 1) throw usage_error("cooling must be in (0,1]");
  if (cfg.proposals_per_iter < 1) throw usage_error("proposals_per_iter must be >= 1");
  const Weights& w = cfg.weights;
  if (w.w1 < 0 || w.w2 < 0 || w.w3 < 0 || w.w4 < 0) throw usage_error("weights must be >= 0");
}

std::vector<Move> union_moves(const CircuitDag& dag, const GameContext& ctx) {
  std::vector<Move> out;
  for (PlayerId p : kAllPlayers) {
    for (Move& m : actions(p, dag, ctx)) {
      if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
    }
  }
  return out;
}

int node_id_sum(const CircuitDag& dag) {
  int sum = 0;
  for (const auto& op : dag.ops) sum += op.id;
  return sum;
}

SearchTrace run_search(const Problem& problem, const Topology& topology, const SearchConfig& cfg,
                       const SeedStrategy& seed, bool nash_mode) {
  check_config(cfg);
  if (problem.n_qubits() != topology.n_qubits) {
    throw usage_error("problem has " + std::to_string(problem.n_qubits()) +
                      " qubits but topology has " + std::to_string(topology.n_qubits));
  }
  const GameContext ctx = make_context(problem, topology, cfg);

  auto [dag, theta] = make_seed(seed, problem, topology);
  if (cfg.outer_iters > 0) theta = inner_gd(dag, theta, problem, cfg);

  SearchTrace tr;
  PayoffVector pv = evaluate_payoffs(dag, theta, ctx);
  double phi = potential(pv, cfg.weights);
  tr.snapshots.push_back({dag, theta});
  double phi_best = phi;
  CircuitDag best_dag = dag;
  Eigen::VectorXd best_theta = theta;

  std::mt19937_64 rng(cfg.rng_seed);
  SearchStatus status = SearchStatus::budget_exhausted;
  NashResidual residual;
  bool residual_fresh = false;

  for (int iter = 0; iter < cfg.outer_iters; ++iter) {
    const PlayerId player = kAllPlayers[static_cast<std::size_t>(iter) % kAllPlayers.size()];
    const std::vector<Move> moves =
        nash_mode ? actions(player, dag, ctx) : union_moves(dag, ctx);

    IterationRecord rec;
    rec.iter = iter;
    if (nash_mode) rec.active_player = player;

    if (!moves.empty()) {
      const std::size_t want =
          std::min<std::size_t>(static_cast<std::size_t>(cfg.proposals_per_iter), moves.size());
      const std::vector<std::size_t> picked = sample_indices(rng, moves.size(), want);

      struct Candidate {
        EditedCircuit circuit;
        PayoffVector payoffs;
        double phi = 0.0;
        std::size_t move_index = 0;
      };
      std::optional<Candidate> best;
      for (std::size_t idx : picked) {
        Candidate c;
        c.circuit = apply_move(dag, theta, moves[idx]);
        c.circuit.theta = inner_gd(c.circuit.dag, c.circuit.theta, problem, cfg);
        c.payoffs = evaluate_payoffs(c.circuit.dag, c.circuit.theta, ctx);
        c.phi = potential(c.payoffs, cfg.weights);
        c.move_index = idx;
        if (!best) {
          best = std::move(c);
          continue;
        }
        // ties on phi broken toward smaller circuits, then older nodes, then
        // earlier proposals
        if (c.phi > best->phi ||
            (c.phi == best->phi &&
             (c.circuit.dag.ops.size() < best->circuit.dag.ops.size() ||
              (c.circuit.dag.ops.size() == best->circuit.dag.ops.size() &&
               node_id_sum(c.circuit.dag) < node_id_sum(best->circuit.dag))))) {
          best = std::move(c);
        }
      }

      const double dphi = best->phi - phi;
      const double temperature = cfg.t0 * std::pow(cfg.cooling, iter);
      const double u = uniform_real01(rng);
      const bool accept = dphi >= 0.0 || u < std::exp(dphi / temperature);
      rec.move = describe(moves[best->move_index]);
      if (accept) {
        dag = std::move(best->circuit.dag);
        theta = std::move(best->circuit.theta);
        pv = best->payoffs;
        phi = best->phi;
        rec.accepted = true;
        tr.snapshots.push_back({dag, theta});
        if (phi > phi_best) {
          phi_best = phi;
          best_dag = dag;
          best_theta = theta;
        }
      }
    }

    residual = nash_residual(dag, theta, ctx);
    residual_fresh = true;
    rec.phi_current = phi;
    rec.phi_best = phi_best;
    rec.payoffs = pv;
    rec.delta_per_player = residual.per_player;
    rec.delta_max = residual.delta_max;
    rec.snapshot_id = static_cast<int>(tr.snapshots.size()) - 1;
    tr.records.push_back(std::move(rec));

    if (nash_mode && residual.delta_max <= cfg.epsilon) {
      status = SearchStatus::converged_epsilon_nash;
      break;
    }
  }

  if (!residual_fresh) residual = nash_residual(dag, theta, ctx);
  tr.final_dag = std::move(dag);
  tr.final_theta = std::move(theta);
  tr.final_phi = phi;
  tr.final_payoffs = pv;
  tr.final_residual = residual;
  tr.best_dag = std::move(best_dag);
  tr.best_theta = std::move(best_theta);
  tr.best_phi = phi_best;
  tr.status = status;
  return tr;
}

}  // namespace

GameContext make_context(const Problem& problem, const Topology& topology,
                         const SearchConfig& cfg) {
  GameContext ctx;
  ctx.problem = problem;
  ctx.topology = topology;
  ctx.weights = cfg.weights;
  ctx.allowed = cfg.gate_set.empty() ? all_gate_kinds() : cfg.gate_set;
  ctx.deff_tol = cfg.deff_tol;
  ctx.two_qubit_weight = cfg.two_qubit_weight;
  ctx.weighted_delta = cfg.delta_weighted;
  return ctx;
}

std::pair<CircuitDag, Eigen::VectorXd> make_seed(const SeedStrategy& strategy,
                                                 const Problem& problem,
                                                 const Topology& topology) {
  const int n = problem.n_qubits();
  CircuitDag dag(n);
  Eigen::VectorXd theta;

  switch (strategy.kind) {
    case SeedStrategy::Kind::cold:
      for (int q = 0; q < n; ++q) dag.add_op(GateKind::h, {q});
      break;
    case SeedStrategy::Kind::qaoa_p1: {
      for (int q = 0; q < n; ++q) dag.add_op(GateKind::h, {q});
      for (const auto& term : problem.hamiltonian.terms) {
        std::vector<int> zs;
        bool zz_only = true;
        for (std::size_t i = 0; i < term.word.size(); ++i) {
          if (term.word[i] == 'Z') {
            zs.push_back(static_cast<int>(i));
          } else if (term.word[i] != 'I') {
            zz_only = false;
          }
        }
        if (!zz_only || zs.size() != 2) continue;
        if (!topology.has_edge(zs[0], zs[1])) continue;
        dag.add_op(GateKind::rzz, {zs[0], zs[1]});
      }
      for (int q = 0; q < n; ++q) dag.add_op(GateKind::rx, {q});
      theta = Eigen::VectorXd::Constant(dag.param_count, 0.01);
      break;
    }
    case SeedStrategy::Kind::givens: {
      std::vector<bool> seen(static_cast<std::size_t>(n), false);
      for (int q : strategy.occupied) {
        if (q < 0 || q >= n) throw usage_error("occupied qubit " + std::to_string(q) + " out of range");
        if (seen[static_cast<std::size_t>(q)]) {
          throw usage_error("occupied qubit " + std::to_string(q) + " listed twice");
        }
        seen[static_cast<std::size_t>(q)] = true;
        dag.add_op(GateKind::x, {q});
      }
      for (const auto& quad : strategy.quadruples) {
        try {
          dag.add_op(GateKind::double_excitation, {quad[0], quad[1], quad[2], quad[3]});
        } catch (const std::invalid_argument& e) {
          throw usage_error(std::string("bad excitation quadruple: ") + e.what());
        }
      }
      theta = Eigen::VectorXd::Zero(dag.param_count);
      break;
    }
    case SeedStrategy::Kind::from_dag_file: {
      std::ifstream in(strategy.path);
      if (!in) throw usage_error("cannot open circuit file '" + strategy.path + "'");
      std::stringstream buf;
      buf << in.rdbuf();
      DeserializedCircuit loaded = deserialize(buf.str());
      if (loaded.dag.n_qubits != n) {
        throw usage_error("circuit file has " + std::to_string(loaded.dag.n_qubits) +
                          " qubits, problem needs " + std::to_string(n));
      }
      dag = std::move(loaded.dag);
      theta = std::move(loaded.theta);
      break;
    }
  }

  const std::vector<Diagnostic> diags = validate(dag, topology);
  if (!diags.empty()) {
    throw usage_error("seed circuit is invalid under the topology: " + diags.front().message);
  }
  if (theta.size() != dag.param_count) theta = Eigen::VectorXd::Zero(dag.param_count);
  return {std::move(dag), std::move(theta)};
}

Eigen::VectorXd inner_gd(const CircuitDag& dag, const Eigen::VectorXd& theta0,
                         const Problem& problem, const SearchConfig& cfg) {
  if (dag.param_count == 0 || cfg.inner_steps <= 0) return theta0;
  const PauliSum& h = problem.hamiltonian;
  const double sgn = problem.sense == TaskSense::maximize_expectation ? 1.0 : -1.0;

  if (cfg.inner_objective == InnerObjective::task_only) {
    auto objective = [&](const Eigen::VectorXd& th) {
      return cfg.weights.w3 * sgn * expectation(run(dag, th), h);
    };
    Eigen::VectorXd theta = theta0;
    Eigen::VectorXd best = theta0;
    double best_value = objective(theta0);
    for (int step = 0; step < cfg.inner_steps; ++step) {
      const Eigen::VectorXd g = gradient(dag, theta, h);
      theta += (cfg.inner_rate * cfg.weights.w3 * sgn) * g;
      const double value = objective(theta);
      if (value > best_value) {
        best_value = value;
        best = theta;
      }
    }
    return best;
  }

  // full potential by central differences
  auto phi_of = [&](const Eigen::VectorXd& th) {
    const Eigen::VectorXcd state = run(dag, th);
    PayoffVector p;
    p.f1 = eff_dim(dag, th, cfg.deff_tol);
    p.f2 = magic_m2(state) / dag.n_qubits;
    p.f3 = task_payoff(state, h, problem.sense);
    p.f4 = hardware_cost(dag, cfg.two_qubit_weight);
    return potential(p, cfg.weights);
  };
  const double fd_step = 1e-4;
  Eigen::VectorXd theta = theta0;
  Eigen::VectorXd best = theta0;
  double best_value = phi_of(theta0);
  for (int step = 0; step < cfg.inner_steps; ++step) {
    Eigen::VectorXd g(theta.size());
    for (Eigen::Index l = 0; l < theta.size(); ++l) {
      Eigen::VectorXd up = theta, down = theta;
      up[l] += fd_step;
      down[l] -= fd_step;
      g[l] = (phi_of(up) - phi_of(down)) / (2 * fd_step);
    }
    theta += cfg.inner_rate * g;
    const double value = phi_of(theta);
    if (value > best_value) {
      best_value = value;
      best = theta;
    }
  }
  return best;
}

SearchTrace nash_search(const Problem& problem, const Topology& topology, const SearchConfig& cfg,
                        const SeedStrategy& seed) {
  return run_search(problem, topology, cfg, seed, true);
}

SearchTrace baseline_sa(const Problem& problem, const Topology& topology, const SearchConfig& cfg,
                        const SeedStrategy& seed) {
  return run_search(problem, topology, cfg, seed, false);
}

std::vector<FrontierPoint> weight_sweep(const Problem& problem, const Topology& topology,
                                        const std::vector<Weights>& corners,
                                        const SearchConfig& cfg, const SeedStrategy& seed,
                                        const std::vector<std::uint64_t>& rng_seeds) {
  if (corners.empty()) throw usage_error("weight_sweep needs at least one corner");
  if (rng_seeds.empty()) throw usage_error("weight_sweep needs at least one rng seed");
  std::vector<FrontierPoint> out;
  for (const Weights& corner : corners) {
    std::optional<SearchTrace> best;
    for (std::uint64_t s : rng_seeds) {
      SearchConfig corner_cfg = cfg;
      corner_cfg.weights = corner;
      corner_cfg.rng_seed = s;
      SearchTrace tr = nash_search(problem, topology, corner_cfg, seed);
      if (!best || tr.best_phi > best->best_phi) best = std::move(tr);
    }
    FrontierPoint pt;
    pt.weights = corner;
    pt.dag = best->best_dag;
    pt.theta = best->best_theta;
    pt.phi = best->best_phi;
    const Eigen::VectorXcd state = run(pt.dag, pt.theta);
    pt.m2_per_n = magic_m2(state) / pt.dag.n_qubits;
    pt.task_value = task_payoff(state, problem.hamiltonian, problem.sense);
    out.push_back(std::move(pt));
  }
  return out;
}

std::vector<bool> pareto_mask(const std::vector<std::array<double, 2>>& points,
                              std::array<ParetoSense, 2> senses) {
  auto oriented = [&](std::size_t i, std::size_t c) {
    return senses[c] == ParetoSense::maximize ? points[i][c] : -points[i][c];
  };
  std::vector<bool> keep(points.size(), true);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      const bool ge0 = oriented(j, 0) >= oriented(i, 0);
      const bool ge1 = oriented(j, 1) >= oriented(i, 1);
      const bool gt = oriented(j, 0) > oriented(i, 0) || oriented(j, 1) > oriented(i, 1);
      if (ge0 && ge1 && gt) {
        keep[i] = false;
        break;
      }
    }
  }
  return keep;
}

std::vector<FrontierPoint> pareto_front(const std::vector<FrontierPoint>& points) {
  std::vector<std::array<double, 2>> coords;
  coords.reserve(points.size());
  for (const auto& p : points) coords.push_back({p.m2_per_n, p.task_value});
  const std::vector<bool> keep =
      pareto_mask(coords, {ParetoSense::maximize, ParetoSense::maximize});
  std::vector<FrontierPoint> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (keep[i]) out.push_back(points[i]);
  }
  return out;
}

}  // namespace qcnash
