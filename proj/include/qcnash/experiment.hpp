#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "qcnash/search.hpp"

namespace qcnash {

/// One experiment: a problem, one or more topologies, search settings, seeds,
/// and an output path. Loaded from a JSON file; unknown fields are rejected
/// and relative paths resolve against the config file's directory.
struct ExperimentConfig {
  Problem problem;
  std::string topology_name;                                  // builtin name, or
  std::optional<std::vector<std::pair<int, int>>> topology_edges;  // explicit edge list
  std::vector<std::string> bench_topologies;                  // bench: builtin names
  SearchConfig search;
  SeedStrategy seed;
  std::vector<std::uint64_t> rng_seeds;
  std::string method = "nash";  // run: "nash" or "baseline"
  std::vector<Weights> corners;  // sweep
  std::optional<double> ceiling_phi;  // bench: count best_phi >= threshold
  std::string output;
};

ExperimentConfig parse_experiment_config(const nlohmann::json& doc, const std::string& base_dir);
ExperimentConfig load_experiment_config(const std::string& path);

Topology materialize_topology(const ExperimentConfig& cfg);

nlohmann::json circuit_to_json(const CircuitDag& dag, const Eigen::VectorXd& theta);
nlohmann::json trace_to_json(const SearchTrace& trace, bool include_snapshots);

/// nash_search (or baseline_sa per config method) once per rng seed.
nlohmann::json cmd_run(const ExperimentConfig& cfg);

/// Paired nash vs baseline on each listed topology, with the comparison
/// statistics (means, bootstrap CI of the mean difference, one-sided
/// Wilcoxon, effect size, optional ceiling hits).
nlohmann::json cmd_bench(const ExperimentConfig& cfg);

/// weight_sweep over the corners plus dominance flags and the frontier.
nlohmann::json cmd_sweep(const ExperimentConfig& cfg);

struct OracleRequest {
  std::optional<std::string> hamiltonian_file;
  std::optional<std::string> builtin;  // "tfim" or "maxcut_complete"
  int n = 0;
  double g = 1.0;
  std::optional<std::string> circuit_file;  // report this circuit's energy and gap
  std::optional<std::string> dump_state;    // write ground amplitudes here
};

nlohmann::json cmd_oracle(const OracleRequest& req);

/// Recomputes the aggregate blocks of an existing result document.
nlohmann::json cmd_stats(const nlohmann::json& result_doc);

/// Serializes to path via a temporary file, so failures leave no partial
/// output.
void write_result_file(const nlohmann::json& doc, const std::string& path);

std::string current_timestamp();

}  // namespace qcnash
