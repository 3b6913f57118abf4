#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qcnash/common.hpp"
#include "qcnash/experiment.hpp"

namespace {

using qcnash::ExperimentConfig;
using nlohmann::json;

// Flag-level overrides applied after the config file loads, so a single config
// can drive several runs (different seeds, budgets, output paths).
struct Overrides {
  std::string config_path;
  std::optional<std::string> output;
  std::optional<std::string> method;
  std::vector<std::uint64_t> rng_seeds;
  std::vector<double> weights;
  std::optional<double> epsilon;
  std::optional<int> outer_iters;
  std::optional<int> inner_steps;
  std::optional<double> inner_rate;
  std::optional<double> t0;
  std::optional<double> cooling;
  std::optional<int> proposals;
  std::optional<std::string> inner_objective;
  bool delta_weighted = false;
  std::optional<double> ceiling_phi;
};

void add_common_options(CLI::App* sub, Overrides& o) {
  sub->add_option("-c,--config", o.config_path, "experiment config (JSON)")->required();
  sub->add_option("-o,--output", o.output, "result path (overrides config)");
  sub->add_option("--rng-seeds", o.rng_seeds, "rng seeds, comma separated")->delimiter(',');
  sub->add_option("--weights", o.weights, "w1,w2,w3,w4")->delimiter(',')->expected(4);
  sub->add_option("--epsilon", o.epsilon, "Nash residual threshold");
  sub->add_option("--outer-iters", o.outer_iters, "outer iteration budget");
  sub->add_option("--inner-steps", o.inner_steps, "gradient steps per candidate");
  sub->add_option("--inner-rate", o.inner_rate, "gradient step size");
  sub->add_option("--t0", o.t0, "initial annealing temperature");
  sub->add_option("--cooling", o.cooling, "temperature decay per iteration");
  sub->add_option("--proposals", o.proposals, "move proposals per iteration");
  sub->add_option("--inner-objective", o.inner_objective, "task_only | full_potential_fd");
  sub->add_flag("--delta-weighted", o.delta_weighted, "scale per-player gaps by their weights");
  sub->add_option("--ceiling-phi", o.ceiling_phi, "count runs with best phi >= this");
}

void apply_overrides(ExperimentConfig& cfg, const Overrides& o) {
  if (o.output) cfg.output = *o.output;
  if (o.method) {
    if (*o.method != "nash" && *o.method != "baseline") {
      throw qcnash::usage_error("--method must be 'nash' or 'baseline'");
    }
    cfg.method = *o.method;
  }
  if (!o.rng_seeds.empty()) cfg.rng_seeds = o.rng_seeds;
  if (!o.weights.empty()) {
    cfg.search.weights = {o.weights[0], o.weights[1], o.weights[2], o.weights[3]};
  }
  if (o.epsilon) cfg.search.epsilon = *o.epsilon;
  if (o.outer_iters) cfg.search.outer_iters = *o.outer_iters;
  if (o.inner_steps) cfg.search.inner_steps = *o.inner_steps;
  if (o.inner_rate) cfg.search.inner_rate = *o.inner_rate;
  if (o.t0) cfg.search.t0 = *o.t0;
  if (o.cooling) cfg.search.cooling = *o.cooling;
  if (o.proposals) cfg.search.proposals_per_iter = *o.proposals;
  if (o.inner_objective) {
    if (*o.inner_objective == "task_only") {
      cfg.search.inner_objective = qcnash::InnerObjective::task_only;
    } else if (*o.inner_objective == "full_potential_fd") {
      cfg.search.inner_objective = qcnash::InnerObjective::full_potential_fd;
    } else {
      throw qcnash::usage_error("--inner-objective must be 'task_only' or 'full_potential_fd'");
    }
  }
  if (o.delta_weighted) cfg.search.delta_weighted = true;
  if (o.ceiling_phi) cfg.ceiling_phi = *o.ceiling_phi;
}

ExperimentConfig load_with_overrides(const Overrides& o) {
  ExperimentConfig cfg = qcnash::load_experiment_config(o.config_path);
  apply_overrides(cfg, o);
  return cfg;
}

void run_command(const Overrides& o) {
  const ExperimentConfig cfg = load_with_overrides(o);
  const json doc = qcnash::cmd_run(cfg);
  qcnash::write_result_file(doc, cfg.output);
  const auto& agg = doc["aggregate"]["best_phi"];
  std::printf("run (%s): %zu seed(s), best phi mean %.6f max %.6f\n", cfg.method.c_str(),
              cfg.rng_seeds.size(), agg["mean"].get<double>(), agg["max"].get<double>());
  std::printf("wrote %s\n", cfg.output.c_str());
}

void bench_command(const Overrides& o) {
  const ExperimentConfig cfg = load_with_overrides(o);
  const json doc = qcnash::cmd_bench(cfg);
  qcnash::write_result_file(doc, cfg.output);
  for (const auto& row : doc["rows"]) {
    const auto& st = row["stats"];
    std::ostringstream line;
    line << row["topology"].get<std::string>() << ": nash "
         << st["nash_phi"]["mean"].get<double>() << " vs baseline "
         << st["baseline_phi"]["mean"].get<double>() << ", dphi "
         << st["delta_phi_mean"].get<double>();
    if (!st["wilcoxon_p"].is_null()) line << ", p " << st["wilcoxon_p"].get<double>();
    std::printf("%s\n", line.str().c_str());
  }
  std::printf("wrote %s\n", cfg.output.c_str());
}

void sweep_command(const Overrides& o) {
  const ExperimentConfig cfg = load_with_overrides(o);
  const json doc = qcnash::cmd_sweep(cfg);
  qcnash::write_result_file(doc, cfg.output);
  std::printf("sweep: %zu corner(s), %zu on the frontier\n", doc["points"].size(),
              doc["front"].size());
  std::printf("wrote %s\n", cfg.output.c_str());
}

struct OracleArgs {
  qcnash::OracleRequest req;
  std::optional<std::string> output;
};

void oracle_command(const OracleArgs& args) {
  const json doc = qcnash::cmd_oracle(args.req);
  std::printf("ground energy (%s): %.10f\n", doc["source"].get<std::string>().c_str(),
              doc["ground_energy"].get<double>());
  if (doc.contains("circuit_energy")) {
    std::printf("circuit energy: %.10f (gap %.3e)\n", doc["circuit_energy"].get<double>(),
                doc["gap"].get<double>());
  }
  if (args.output) {
    qcnash::write_result_file(doc, *args.output);
    std::printf("wrote %s\n", args.output->c_str());
  }
}

struct StatsArgs {
  std::string input;
  std::optional<std::string> output;
};

void stats_command(const StatsArgs& args) {
  std::ifstream in(args.input);
  if (!in) throw qcnash::usage_error("cannot open '" + args.input + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw qcnash::usage_error("result parse error in '" + args.input + "': " + e.what());
  }
  const json recomputed = qcnash::cmd_stats(doc);
  if (args.output) {
    qcnash::write_result_file(recomputed, *args.output);
    std::printf("wrote %s\n", args.output->c_str());
  } else {
    std::printf("%s\n", recomputed.dump(2).c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nash-equilibrium circuit search over quantum ansatz DAGs"};
  app.require_subcommand(1);

  Overrides run_o, bench_o, sweep_o;
  OracleArgs oracle_a;
  StatsArgs stats_a;

  CLI::App* run = app.add_subcommand("run", "search once per rng seed and record traces");
  add_common_options(run, run_o);
  run->add_option("--method", run_o.method, "nash | baseline");
  run->callback([&] { run_command(run_o); });

  CLI::App* bench = app.add_subcommand("bench", "paired nash vs baseline comparison");
  add_common_options(bench, bench_o);
  bench->callback([&] { bench_command(bench_o); });

  CLI::App* sweep = app.add_subcommand("sweep", "weight sweep and Pareto frontier");
  add_common_options(sweep, sweep_o);
  sweep->callback([&] { sweep_command(sweep_o); });

  CLI::App* oracle = app.add_subcommand("oracle", "exact ground energy by dense diagonalization");
  auto* file_opt = oracle->add_option("-f,--file", oracle_a.req.hamiltonian_file,
                                      "Pauli sum text file");
  oracle->add_option("--builtin", oracle_a.req.builtin, "tfim | maxcut_complete")
      ->excludes(file_opt);
  oracle->add_option("-n,--n", oracle_a.req.n, "qubit count for --builtin");
  oracle->add_option("-g,--g", oracle_a.req.g, "transverse field for --builtin tfim");
  oracle->add_option("--circuit", oracle_a.req.circuit_file,
                     "circuit JSON; report its energy and gap");
  oracle->add_option("--dump-state", oracle_a.req.dump_state, "write ground amplitudes here");
  oracle->add_option("-o,--output", oracle_a.output, "also write the result as JSON");
  oracle->callback([&] { oracle_command(oracle_a); });

  CLI::App* stats = app.add_subcommand("stats", "recompute aggregates from a result file");
  stats->add_option("input", stats_a.input, "existing result file")->required();
  stats->add_option("-o,--output", stats_a.output, "write recomputed stats here");
  stats->callback([&] { stats_command(stats_a); });

  try {
    app.parse(argc, argv);
  } catch (const qcnash::usage_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const qcnash::capability_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
