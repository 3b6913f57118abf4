#include "qcnash/experiment.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qcnash/common.hpp"
#include "qcnash/simulator.hpp"
#include "qcnash/stats.hpp"

namespace qcnash {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;
constexpr std::uint64_t kBootstrapSeed = 1;  // fixed so result files reproduce

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string resolve_path(const std::string& base_dir, const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_absolute() || base_dir.empty()) return path;
  return (std::filesystem::path(base_dir) / p).string();
}

void require_object(const json& v, const std::string& where) {
  if (!v.is_object()) throw usage_error(where + " must be an object");
}

void check_keys(const json& obj, const std::string& where,
                std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) {
      if (key == a) {
        ok = true;
        break;
      }
    }
    if (!ok) throw usage_error(where + ": unknown field '" + key + "'");
  }
}

const json& need(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw usage_error(where + ": missing field '" + std::string(key) + "'");
  return obj.at(key);
}

double as_number(const json& v, const std::string& where) {
  if (!v.is_number()) throw usage_error(where + " must be a number");
  return v.get<double>();
}

int as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw usage_error(where + " must be an integer");
  return v.get<int>();
}

bool as_bool(const json& v, const std::string& where) {
  if (!v.is_boolean()) throw usage_error(where + " must be a boolean");
  return v.get<bool>();
}

std::string as_string(const json& v, const std::string& where) {
  if (!v.is_string()) throw usage_error(where + " must be a string");
  return v.get<std::string>();
}

std::vector<std::pair<int, int>> parse_edge_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw usage_error(where + " must be an array of [a,b] pairs");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : v) {
    if (!e.is_array() || e.size() != 2) {
      throw usage_error(where + " entries must be [a,b] pairs");
    }
    edges.emplace_back(as_int(e[0], where), as_int(e[1], where));
  }
  return edges;
}

TaskSense parse_sense(const std::string& s, const std::string& where) {
  if (s == "minimize") return TaskSense::minimize_expectation;
  if (s == "maximize") return TaskSense::maximize_expectation;
  throw usage_error(where + ": sense must be 'minimize' or 'maximize', got '" + s + "'");
}

Problem parse_problem(const json& p, const std::string& base_dir) {
  require_object(p, "problem");
  const std::string kind = as_string(need(p, "kind", "problem"), "problem.kind");
  if (kind == "maxcut") {
    check_keys(p, "problem", {"kind", "n", "edges"});
    const int n = as_int(need(p, "n", "problem"), "problem.n");
    Graph g;
    if (p.contains("edges")) {
      g.n_vertices = n;
      for (const auto& [a, b] : parse_edge_list(p["edges"], "problem.edges")) {
        try {
          g.add_edge(a, b);
        } catch (const std::invalid_argument& e) {
          throw usage_error(std::string("problem.edges: ") + e.what());
        }
      }
    } else {
      g = Graph::complete(n);
    }
    return maxcut_problem(g);
  }
  if (kind == "tfim") {
    check_keys(p, "problem", {"kind", "n", "g"});
    return tfim_problem(as_int(need(p, "n", "problem"), "problem.n"),
                        as_number(need(p, "g", "problem"), "problem.g"));
  }
  if (kind == "pauli_file") {
    check_keys(p, "problem", {"kind", "path", "sense"});
    const std::string path =
        resolve_path(base_dir, as_string(need(p, "path", "problem"), "problem.path"));
    Problem out;
    out.hamiltonian = parse_pauli_file(read_text_file(path));
    out.sense = parse_sense(as_string(need(p, "sense", "problem"), "problem.sense"), "problem");
    out.label = "pauli_file(" + std::filesystem::path(path).filename().string() + ")";
    return out;
  }
  throw usage_error("problem.kind must be 'maxcut', 'tfim' or 'pauli_file', got '" + kind + "'");
}

SearchConfig parse_search(const json& s) {
  require_object(s, "search");
  check_keys(s, "search",
             {"weights", "epsilon", "outer_iters", "inner_steps", "inner_rate", "t0", "cooling",
              "proposals_per_iter", "inner_objective", "delta_weighted", "deff_tol",
              "two_qubit_weight", "gate_set"});
  SearchConfig cfg;
  const json& w = need(s, "weights", "search");
  if (!w.is_array() || w.size() != 4) {
    throw usage_error("search.weights must be an array of 4 numbers");
  }
  cfg.weights = {as_number(w[0], "search.weights"), as_number(w[1], "search.weights"),
                 as_number(w[2], "search.weights"), as_number(w[3], "search.weights")};
  if (s.contains("epsilon")) cfg.epsilon = as_number(s["epsilon"], "search.epsilon");
  if (s.contains("outer_iters")) cfg.outer_iters = as_int(s["outer_iters"], "search.outer_iters");
  if (s.contains("inner_steps")) cfg.inner_steps = as_int(s["inner_steps"], "search.inner_steps");
  if (s.contains("inner_rate")) cfg.inner_rate = as_number(s["inner_rate"], "search.inner_rate");
  if (s.contains("t0")) cfg.t0 = as_number(s["t0"], "search.t0");
  if (s.contains("cooling")) cfg.cooling = as_number(s["cooling"], "search.cooling");
  if (s.contains("proposals_per_iter")) {
    cfg.proposals_per_iter = as_int(s["proposals_per_iter"], "search.proposals_per_iter");
  }
  if (s.contains("inner_objective")) {
    const std::string obj = as_string(s["inner_objective"], "search.inner_objective");
    if (obj == "task_only") {
      cfg.inner_objective = InnerObjective::task_only;
    } else if (obj == "full_potential_fd") {
      cfg.inner_objective = InnerObjective::full_potential_fd;
    } else {
      throw usage_error("search.inner_objective must be 'task_only' or 'full_potential_fd'");
    }
  }
  if (s.contains("delta_weighted")) {
    cfg.delta_weighted = as_bool(s["delta_weighted"], "search.delta_weighted");
  }
  if (s.contains("deff_tol")) cfg.deff_tol = as_number(s["deff_tol"], "search.deff_tol");
  if (s.contains("two_qubit_weight")) {
    cfg.two_qubit_weight = as_number(s["two_qubit_weight"], "search.two_qubit_weight");
  }
  if (s.contains("gate_set")) {
    const json& gs = s["gate_set"];
    if (!gs.is_array() || gs.empty()) {
      throw usage_error("search.gate_set must be a non-empty array of gate names");
    }
    cfg.gate_set.clear();
    for (const auto& g : gs) {
      const std::string name = as_string(g, "search.gate_set");
      const auto kind = gate_from_name(name);
      if (!kind) throw usage_error("search.gate_set: unknown gate '" + name + "'");
      cfg.gate_set.push_back(*kind);
    }
  }
  return cfg;
}

SeedStrategy parse_seed(const json& s, const std::string& base_dir) {
  require_object(s, "seed_strategy");
  const std::string kind = as_string(need(s, "kind", "seed_strategy"), "seed_strategy.kind");
  if (kind == "cold") {
    check_keys(s, "seed_strategy", {"kind"});
    return SeedStrategy::cold();
  }
  if (kind == "qaoa_p1") {
    check_keys(s, "seed_strategy", {"kind"});
    return SeedStrategy::qaoa_p1();
  }
  if (kind == "from_dag_file") {
    check_keys(s, "seed_strategy", {"kind", "path"});
    return SeedStrategy::from_dag_file(
        resolve_path(base_dir, as_string(need(s, "path", "seed_strategy"), "seed_strategy.path")));
  }
  if (kind == "givens") {
    check_keys(s, "seed_strategy", {"kind", "occupied", "quadruples"});
    std::vector<int> occ;
    for (const auto& q : need(s, "occupied", "seed_strategy")) {
      occ.push_back(as_int(q, "seed_strategy.occupied"));
    }
    std::vector<std::array<int, 4>> quads;
    for (const auto& quad : need(s, "quadruples", "seed_strategy")) {
      if (!quad.is_array() || quad.size() != 4) {
        throw usage_error("seed_strategy.quadruples entries must have 4 qubits");
      }
      quads.push_back({as_int(quad[0], "quadruple"), as_int(quad[1], "quadruple"),
                       as_int(quad[2], "quadruple"), as_int(quad[3], "quadruple")});
    }
    return SeedStrategy::givens(std::move(occ), std::move(quads));
  }
  throw usage_error("seed_strategy.kind must be cold, qaoa_p1, from_dag_file or givens");
}

Weights parse_corner(const json& c, const std::string& where) {
  if (!c.is_array() || c.size() != 4) throw usage_error(where + " must be [w1,w2,w3,w4]");
  return {as_number(c[0], where), as_number(c[1], where), as_number(c[2], where),
          as_number(c[3], where)};
}

json weights_to_json(const Weights& w) { return json::array({w.w1, w.w2, w.w3, w.w4}); }

json payoffs_to_json(const PayoffVector& p) {
  return json{{"f1", p.f1}, {"f2", p.f2}, {"f3", p.f3}, {"f4", p.f4}};
}

json deltas_to_json(const std::array<double, 4>& d) {
  json out;
  for (std::size_t i = 0; i < kAllPlayers.size(); ++i) {
    out[std::string(player_name(kAllPlayers[i]))] = d[i];
  }
  return out;
}

json summary_to_json(const SummaryStats& s) {
  return json{{"mean", s.mean}, {"sd", s.sd}, {"median", s.median}, {"min", s.min},
              {"max", s.max}};
}

json config_to_json(const ExperimentConfig& cfg) {
  json out;
  out["problem"] = {{"label", cfg.problem.label},
                    {"n_qubits", cfg.problem.n_qubits()},
                    {"sense", cfg.problem.sense == TaskSense::minimize_expectation ? "minimize"
                                                                                   : "maximize"},
                    {"hamiltonian", format_pauli_sum(cfg.problem.hamiltonian)}};
  if (cfg.topology_edges) {
    json edges = json::array();
    for (const auto& [a, b] : *cfg.topology_edges) edges.push_back(json::array({a, b}));
    out["topology"] = {{"edges", edges}};
  } else if (!cfg.topology_name.empty()) {
    out["topology"] = cfg.topology_name;
  }
  if (!cfg.bench_topologies.empty()) out["topologies"] = cfg.bench_topologies;
  const SearchConfig& s = cfg.search;
  json gate_names = json::array();
  for (GateKind k : s.gate_set) gate_names.push_back(std::string(gate_name(k)));
  out["search"] = {{"weights", weights_to_json(s.weights)},
                   {"epsilon", s.epsilon},
                   {"outer_iters", s.outer_iters},
                   {"inner_steps", s.inner_steps},
                   {"inner_rate", s.inner_rate},
                   {"t0", s.t0},
                   {"cooling", s.cooling},
                   {"proposals_per_iter", s.proposals_per_iter},
                   {"inner_objective", s.inner_objective == InnerObjective::task_only
                                           ? "task_only"
                                           : "full_potential_fd"},
                   {"delta_weighted", s.delta_weighted},
                   {"deff_tol", s.deff_tol},
                   {"two_qubit_weight", s.two_qubit_weight},
                   {"gate_set", gate_names}};
  json seed;
  switch (cfg.seed.kind) {
    case SeedStrategy::Kind::cold: seed["kind"] = "cold"; break;
    case SeedStrategy::Kind::qaoa_p1: seed["kind"] = "qaoa_p1"; break;
    case SeedStrategy::Kind::from_dag_file:
      seed["kind"] = "from_dag_file";
      seed["path"] = cfg.seed.path;
      break;
    case SeedStrategy::Kind::givens: {
      seed["kind"] = "givens";
      seed["occupied"] = cfg.seed.occupied;
      json quads = json::array();
      for (const auto& q : cfg.seed.quadruples) quads.push_back(json::array({q[0], q[1], q[2], q[3]}));
      seed["quadruples"] = quads;
      break;
    }
  }
  out["seed_strategy"] = seed;
  out["rng_seeds"] = cfg.rng_seeds;
  out["method"] = cfg.method;
  if (!cfg.corners.empty()) {
    json corners = json::array();
    for (const auto& c : cfg.corners) corners.push_back(weights_to_json(c));
    out["corners"] = corners;
  }
  if (cfg.ceiling_phi) out["ceiling_phi"] = *cfg.ceiling_phi;
  out["output"] = cfg.output;
  return out;
}

json result_header(const char* command, const ExperimentConfig& cfg) {
  json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = command;
  out["timestamp"] = current_timestamp();
  out["config"] = config_to_json(cfg);
  return out;
}

struct BestSummary {
  double phi = 0.0;
  double task_value = 0.0;
  double expectation_value = 0.0;
  double m2_per_n = 0.0;
};

BestSummary best_summary(const SearchTrace& tr, const Problem& problem) {
  BestSummary out;
  out.phi = tr.best_phi;
  const Eigen::VectorXcd state = run(tr.best_dag, tr.best_theta);
  out.expectation_value = expectation(state, problem.hamiltonian);
  out.task_value =
      problem.sense == TaskSense::minimize_expectation ? -out.expectation_value : out.expectation_value;
  out.m2_per_n = magic_m2(state) / tr.best_dag.n_qubits;
  return out;
}

json best_summary_to_json(const BestSummary& b) {
  return json{{"phi", b.phi},
              {"task_value", b.task_value},
              {"hamiltonian_expectation", b.expectation_value},
              {"m2_per_n", b.m2_per_n}};
}

SearchTrace run_method(const std::string& method, const Problem& problem, const Topology& topo,
                       const SearchConfig& search, const SeedStrategy& seed) {
  if (method == "nash") return nash_search(problem, topo, search, seed);
  if (method == "baseline") return baseline_sa(problem, topo, search, seed);
  throw usage_error("method must be 'nash' or 'baseline', got '" + method + "'");
}

}  // namespace

ExperimentConfig parse_experiment_config(const json& doc, const std::string& base_dir) {
  require_object(doc, "config");
  check_keys(doc, "config",
             {"problem", "topology", "topologies", "search", "seed_strategy", "rng_seeds",
              "method", "corners", "ceiling_phi", "output"});
  ExperimentConfig cfg;
  cfg.problem = parse_problem(need(doc, "problem", "config"), base_dir);

  if (doc.contains("topology")) {
    const json& topo = doc["topology"];
    if (topo.is_string()) {
      cfg.topology_name = topo.get<std::string>();
    } else if (topo.is_object()) {
      check_keys(topo, "topology", {"edges"});
      cfg.topology_edges = parse_edge_list(need(topo, "edges", "topology"), "topology.edges");
    } else {
      throw usage_error("topology must be a builtin name or an {\"edges\": ...} object");
    }
  }
  if (doc.contains("topologies")) {
    const json& list = doc["topologies"];
    if (!list.is_array() || list.empty()) {
      throw usage_error("topologies must be a non-empty array of builtin names");
    }
    for (const auto& t : list) cfg.bench_topologies.push_back(as_string(t, "topologies"));
  }

  cfg.search = parse_search(need(doc, "search", "config"));
  cfg.seed = parse_seed(need(doc, "seed_strategy", "config"), base_dir);

  const json& seeds = need(doc, "rng_seeds", "config");
  if (!seeds.is_array() || seeds.empty()) {
    throw usage_error("rng_seeds must be a non-empty array of integers");
  }
  for (const auto& s : seeds) {
    if (!s.is_number_integer() || s.get<std::int64_t>() < 0) {
      throw usage_error("rng_seeds entries must be non-negative integers");
    }
    cfg.rng_seeds.push_back(s.get<std::uint64_t>());
  }

  if (doc.contains("method")) {
    cfg.method = as_string(doc["method"], "method");
    if (cfg.method != "nash" && cfg.method != "baseline") {
      throw usage_error("method must be 'nash' or 'baseline'");
    }
  }
  if (doc.contains("corners")) {
    for (const auto& c : doc["corners"]) cfg.corners.push_back(parse_corner(c, "corners"));
  }
  if (doc.contains("ceiling_phi")) {
    cfg.ceiling_phi = as_number(doc["ceiling_phi"], "ceiling_phi");
  }
  cfg.output = resolve_path(base_dir, as_string(need(doc, "output", "config"), "output"));
  return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  json doc;
  try {
    doc = json::parse(read_text_file(path));
  } catch (const json::parse_error& e) {
    throw usage_error("config parse error in '" + path + "': " + e.what());
  }
  return parse_experiment_config(doc, std::filesystem::path(path).parent_path().string());
}

Topology materialize_topology(const ExperimentConfig& cfg) {
  const int n = cfg.problem.n_qubits();
  if (cfg.topology_edges) {
    Topology t;
    t.n_qubits = n;
    for (const auto& [a, b] : *cfg.topology_edges) {
      try {
        t.add_edge(a, b);
      } catch (const std::invalid_argument& e) {
        throw usage_error(std::string("topology.edges: ") + e.what());
      }
    }
    return t;
  }
  if (cfg.topology_name.empty()) throw usage_error("config names no topology");
  return builtin_topology(cfg.topology_name, n);
}

json circuit_to_json(const CircuitDag& dag, const Eigen::VectorXd& theta) {
  return json::parse(serialize(dag, theta));
}

json trace_to_json(const SearchTrace& tr, bool include_snapshots) {
  json out;
  out["status"] = tr.status == SearchStatus::converged_epsilon_nash ? "converged_epsilon_nash"
                                                                    : "budget_exhausted";
  out["final"] = {{"phi", tr.final_phi},
                  {"payoffs", payoffs_to_json(tr.final_payoffs)},
                  {"delta_max", tr.final_residual.delta_max},
                  {"delta_per_player", deltas_to_json(tr.final_residual.per_player)},
                  {"circuit", circuit_to_json(tr.final_dag, tr.final_theta)}};
  out["best"] = {{"phi", tr.best_phi}, {"circuit", circuit_to_json(tr.best_dag, tr.best_theta)}};
  json iters = json::array();
  for (const auto& r : tr.records) {
    json rec = {{"iter", r.iter},
                {"phi_current", r.phi_current},
                {"phi_best", r.phi_best},
                {"payoffs", payoffs_to_json(r.payoffs)},
                {"delta_max", r.delta_max},
                {"delta_per_player", deltas_to_json(r.delta_per_player)},
                {"accepted", r.accepted},
                {"move", r.move},
                {"snapshot_id", r.snapshot_id}};
    rec["player"] = r.active_player ? json(std::string(player_name(*r.active_player))) : json();
    iters.push_back(std::move(rec));
  }
  out["iterations"] = std::move(iters);
  if (include_snapshots) {
    json snaps = json::array();
    for (const auto& s : tr.snapshots) snaps.push_back(circuit_to_json(s.dag, s.theta));
    out["snapshots"] = std::move(snaps);
  }
  return out;
}

json cmd_run(const ExperimentConfig& cfg) {
  const Topology topo = materialize_topology(cfg);
  json out = result_header("run", cfg);
  json results = json::array();
  std::vector<double> phis, tasks;
  for (std::uint64_t s : cfg.rng_seeds) {
    SearchConfig search = cfg.search;
    search.rng_seed = s;
    const SearchTrace tr = run_method(cfg.method, cfg.problem, topo, search, cfg.seed);
    const BestSummary best = best_summary(tr, cfg.problem);
    phis.push_back(best.phi);
    tasks.push_back(best.task_value);
    results.push_back({{"rng_seed", s},
                       {"best_summary", best_summary_to_json(best)},
                       {"trace", trace_to_json(tr, true)}});
  }
  out["results"] = std::move(results);
  out["aggregate"] = {{"best_phi", summary_to_json(summarize(phis))},
                      {"best_task_value", summary_to_json(summarize(tasks))}};
  return out;
}

namespace {

json bench_stats_block(const std::vector<double>& nash_phis, const std::vector<double>& base_phis,
                       const std::optional<double>& ceiling) {
  json stats;
  const SummaryStats ns = summarize(nash_phis);
  const SummaryStats bs = summarize(base_phis);
  stats["nash_phi"] = summary_to_json(ns);
  stats["baseline_phi"] = summary_to_json(bs);
  std::vector<double> diff(nash_phis.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = nash_phis[i] - base_phis[i];
  stats["delta_phi_mean"] = summarize(diff).mean;
  const auto [lo, hi] = bootstrap_ci(diff, 0.95, 10000, kBootstrapSeed);
  stats["delta_phi_ci95"] = json::array({lo, hi});
  try {
    stats["wilcoxon_p"] = wilcoxon_paired_onesided(nash_phis, base_phis);
  } catch (const usage_error& e) {
    stats["wilcoxon_p"] = nullptr;
    stats["wilcoxon_note"] = e.what();
  }
  try {
    stats["cohens_dz"] = cohens_dz(nash_phis, base_phis);
  } catch (const usage_error& e) {
    stats["cohens_dz"] = nullptr;
    stats["cohens_dz_note"] = e.what();
  }
  if (ceiling) {
    int nash_hits = 0, base_hits = 0;
    for (double p : nash_phis) nash_hits += p >= *ceiling;
    for (double p : base_phis) base_hits += p >= *ceiling;
    stats["ceiling_threshold"] = *ceiling;
    stats["ceiling_hits_nash"] = nash_hits;
    stats["ceiling_hits_baseline"] = base_hits;
  }
  return stats;
}

}  // namespace

json cmd_bench(const ExperimentConfig& cfg) {
  std::vector<std::string> names = cfg.bench_topologies;
  if (names.empty()) {
    if (cfg.topology_name.empty()) {
      throw usage_error("bench needs 'topologies' (or a builtin 'topology') in the config");
    }
    names.push_back(cfg.topology_name);
  }
  json out = result_header("bench", cfg);
  json rows = json::array();
  for (const std::string& name : names) {
    const Topology topo = builtin_topology(name, cfg.problem.n_qubits());
    json row;
    row["topology"] = name;
    const auto [seed_dag, seed_theta] = make_seed(cfg.seed, cfg.problem, topo);
    row["seed_circuit"] = circuit_to_json(seed_dag, seed_theta);
    row["paired_seeds"] = cfg.rng_seeds;
    json per_seed = json::array();
    std::vector<double> nash_phis, base_phis;
    for (std::uint64_t s : cfg.rng_seeds) {
      SearchConfig search = cfg.search;
      search.rng_seed = s;
      const SearchTrace nash = nash_search(cfg.problem, topo, search, cfg.seed);
      const SearchTrace base = baseline_sa(cfg.problem, topo, search, cfg.seed);
      nash_phis.push_back(nash.best_phi);
      base_phis.push_back(base.best_phi);
      per_seed.push_back({{"rng_seed", s},
                          {"nash", trace_to_json(nash, false)},
                          {"baseline", trace_to_json(base, false)}});
    }
    row["per_seed"] = std::move(per_seed);
    row["stats"] = bench_stats_block(nash_phis, base_phis, cfg.ceiling_phi);
    rows.push_back(std::move(row));
  }
  out["rows"] = std::move(rows);
  return out;
}

json cmd_sweep(const ExperimentConfig& cfg) {
  if (cfg.corners.empty()) throw usage_error("sweep needs a non-empty 'corners' list");
  const Topology topo = materialize_topology(cfg);
  const std::vector<FrontierPoint> points =
      weight_sweep(cfg.problem, topo, cfg.corners, cfg.search, cfg.seed, cfg.rng_seeds);
  std::vector<std::array<double, 2>> coords;
  coords.reserve(points.size());
  for (const auto& p : points) coords.push_back({p.m2_per_n, p.task_value});
  const std::vector<bool> keep =
      pareto_mask(coords, {ParetoSense::maximize, ParetoSense::maximize});

  json out = result_header("sweep", cfg);
  json pts = json::array();
  json front = json::array();
  for (std::size_t i = 0; i < points.size(); ++i) {
    pts.push_back({{"weights", weights_to_json(points[i].weights)},
                   {"m2_per_n", points[i].m2_per_n},
                   {"task_value", points[i].task_value},
                   {"phi", points[i].phi},
                   {"on_front", static_cast<bool>(keep[i])},
                   {"circuit", circuit_to_json(points[i].dag, points[i].theta)}});
    if (keep[i]) front.push_back(i);
  }
  out["points"] = std::move(pts);
  out["front"] = std::move(front);
  return out;
}

json cmd_oracle(const OracleRequest& req) {
  PauliSum h;
  std::string source;
  if (req.hamiltonian_file) {
    h = parse_pauli_file(read_text_file(*req.hamiltonian_file));
    source = *req.hamiltonian_file;
  } else if (req.builtin) {
    if (*req.builtin == "tfim") {
      h = tfim_problem(req.n, req.g).hamiltonian;
      source = "tfim(n=" + std::to_string(req.n) + ")";
    } else if (*req.builtin == "maxcut_complete") {
      h = maxcut_problem(Graph::complete(req.n)).hamiltonian;
      source = "maxcut_complete(n=" + std::to_string(req.n) + ")";
    } else {
      throw usage_error("builtin must be 'tfim' or 'maxcut_complete', got '" + *req.builtin + "'");
    }
  } else {
    throw usage_error("oracle needs a Hamiltonian file or a builtin spec");
  }
  const GroundSolution ground = exact_ground_energy(h);
  json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = "oracle";
  out["timestamp"] = current_timestamp();
  out["source"] = source;
  out["n_qubits"] = h.n_qubits;
  out["ground_energy"] = ground.energy;
  if (req.circuit_file) {
    const DeserializedCircuit loaded = deserialize(read_text_file(*req.circuit_file));
    if (loaded.dag.n_qubits != h.n_qubits) {
      throw usage_error("circuit has " + std::to_string(loaded.dag.n_qubits) +
                        " qubits, Hamiltonian has " + std::to_string(h.n_qubits));
    }
    const double circuit_energy = expectation(run(loaded.dag, loaded.theta), h);
    out["circuit_energy"] = circuit_energy;
    out["gap"] = circuit_energy - ground.energy;
  }
  if (req.dump_state) {
    std::ofstream dump(*req.dump_state);
    if (!dump) throw usage_error("cannot write '" + *req.dump_state + "'");
    char buf[80];
    for (Eigen::Index i = 0; i < ground.state.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.17g %.17g\n", ground.state[i].real(),
                    ground.state[i].imag());
      dump << buf;
    }
    out["state_file"] = *req.dump_state;
  }
  return out;
}

json cmd_stats(const json& result_doc) {
  require_object(result_doc, "result file");
  const std::string source =
      as_string(need(result_doc, "command", "result file"), "result file command");
  json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = "stats";
  out["timestamp"] = current_timestamp();
  out["source_command"] = source;

  if (source == "run") {
    std::vector<double> phis, tasks;
    for (const auto& r : need(result_doc, "results", "run file")) {
      const json& best = need(r, "best_summary", "run result");
      phis.push_back(as_number(need(best, "phi", "best_summary"), "phi"));
      tasks.push_back(as_number(need(best, "task_value", "best_summary"), "task_value"));
    }
    out["aggregate"] = {{"best_phi", summary_to_json(summarize(phis))},
                        {"best_task_value", summary_to_json(summarize(tasks))}};
    return out;
  }
  if (source == "bench") {
    std::optional<double> ceiling;
    if (result_doc.contains("config") && result_doc["config"].contains("ceiling_phi")) {
      ceiling = as_number(result_doc["config"]["ceiling_phi"], "ceiling_phi");
    }
    json rows = json::array();
    for (const auto& row : need(result_doc, "rows", "bench file")) {
      std::vector<double> nash_phis, base_phis;
      for (const auto& seed : need(row, "per_seed", "bench row")) {
        nash_phis.push_back(
            as_number(need(need(seed, "nash", "per_seed"), "best", "nash")["phi"], "phi"));
        base_phis.push_back(
            as_number(need(need(seed, "baseline", "per_seed"), "best", "baseline")["phi"], "phi"));
      }
      rows.push_back({{"topology", need(row, "topology", "bench row")},
                      {"stats", bench_stats_block(nash_phis, base_phis, ceiling)}});
    }
    out["rows"] = std::move(rows);
    return out;
  }
  if (source == "sweep") {
    std::vector<std::array<double, 2>> coords;
    const json& points = need(result_doc, "points", "sweep file");
    for (const auto& p : points) {
      coords.push_back({as_number(need(p, "m2_per_n", "sweep point"), "m2_per_n"),
                        as_number(need(p, "task_value", "sweep point"), "task_value")});
    }
    const std::vector<bool> keep =
        pareto_mask(coords, {ParetoSense::maximize, ParetoSense::maximize});
    json front = json::array();
    for (std::size_t i = 0; i < keep.size(); ++i) {
      if (keep[i]) front.push_back(i);
    }
    out["front"] = std::move(front);
    return out;
  }
  throw usage_error("cannot recompute stats for command '" + source + "'");
}

void write_result_file(const json& doc, const std::string& path) {
  const std::filesystem::path target(path);
  if (target.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(target.parent_path(), ec);
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream outfile(tmp);
    if (!outfile) throw usage_error("cannot write '" + tmp + "'");
    outfile << doc.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, target);
}

std::string current_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace qcnash
