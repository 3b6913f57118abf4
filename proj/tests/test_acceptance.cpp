// Acceptance gate: one test case per criterion, each printed as a
// [PASS]/[FAIL] line by the listener below. Tolerances are pinned as
// constants next to the criteria that use them.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qcnash/circuit.hpp"
#include "qcnash/common.hpp"
#include "qcnash/experiment.hpp"
#include "qcnash/game.hpp"
#include "qcnash/payoffs.hpp"
#include "qcnash/problems.hpp"
#include "qcnash/rng.hpp"
#include "qcnash/search.hpp"
#include "qcnash/simulator.hpp"
#include "qcnash/stats.hpp"
#include "residual_oracle.hpp"

using namespace qcnash;

namespace {

struct CriterionReporter : doctest::IReporter {
  const doctest::TestCaseData* current = nullptr;
  explicit CriterionReporter(const doctest::ContextOptions&) {}
  void report_query(const doctest::QueryData&) override {}
  void test_run_start() override {}
  void test_run_end(const doctest::TestRunStats&) override {}
  void test_case_start(const doctest::TestCaseData& in) override { current = &in; }
  void test_case_reenter(const doctest::TestCaseData&) override {}
  void test_case_end(const doctest::CurrentTestCaseStats& st) override {
    std::printf("[%s] %s\n", st.testCaseSuccess ? "PASS" : "FAIL", current->m_name);
    std::fflush(stdout);
  }
  void test_case_exception(const doctest::TestCaseException&) override {}
  void subcase_start(const doctest::SubcaseSignature&) override {}
  void subcase_end() override {}
  void log_assert(const doctest::AssertData&) override {}
  void log_message(const doctest::MessageData&) override {}
  void test_case_skipped(const doctest::TestCaseData&) override {}
};
REGISTER_LISTENER("criteria", 1, CriterionReporter);

// pinned tolerances
constexpr double kNormTol = 1e-10;         // criterion 1
constexpr double kShiftVsFdTol = 1e-6;     // criterion 1
constexpr double kPurityTol = 1e-8;        // criterion 1
constexpr double kMagicTol = 1e-9;         // criteria 2, 5, 6
constexpr double kQfimTol = 1e-9;          // criterion 3
constexpr double kEigFloor = -1e-8;        // criterion 3
constexpr double kCertSlack = 1e-12;       // criterion 4
constexpr double kTaskTol = 1e-9;          // criterion 5
constexpr double kFrontierHighMagic = 0.3; // criterion 6
constexpr double kRelErrCap = 0.10;        // criterion 7
constexpr double kWilcoxonRef = 0.125;             // criterion 8, d = (1,2,3)
constexpr double kDzRef = 1.5652475842498528;      // criterion 8, d = (1,1,1,1,3)
constexpr double kStatRefTol = 1e-12;              // criterion 8
constexpr double kMeanRefA = 0.094;        // criterion 9, exact
constexpr double kMeanRefB = 0.061;        // criterion 9, exact
constexpr double kH2Reference = -1.1373;   // criterion 10, Ha
constexpr double kH2ReferenceTol = 5e-5;   // criterion 10
constexpr double kChemAccuracy = 1.6e-3;   // criterion 10, Ha

std::string data_path(const std::string& name) {
  const char* dir = std::getenv("QCNASH_DATA");
  REQUIRE_MESSAGE(dir != nullptr, "QCNASH_DATA must point at the data directory");
  return std::string(dir) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "cannot open " << path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<int> pick_qubits(std::mt19937_64& rng, int n, int arity) {
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) all[static_cast<std::size_t>(q)] = q;
  for (int i = 0; i < arity; ++i) {
    const std::size_t j =
        static_cast<std::size_t>(i) +
        uniform_index(rng, all.size() - static_cast<std::size_t>(i));
    std::swap(all[static_cast<std::size_t>(i)], all[j]);
  }
  return {all.begin(), all.begin() + arity};
}

CircuitDag random_circuit(std::mt19937_64& rng, int n, int max_ops,
                          const std::vector<GateKind>& pool, int max_params = 1 << 30) {
  CircuitDag dag(n);
  const int ops = 1 + static_cast<int>(uniform_index(rng, static_cast<std::size_t>(max_ops)));
  for (int i = 0; i < ops; ++i) {
    const GateKind k = pool[uniform_index(rng, pool.size())];
    if (gate_arity(k) > n) continue;
    if (gate_parameterized(k) && dag.param_count >= max_params) continue;
    dag.add_op(k, pick_qubits(rng, n, gate_arity(k)));
  }
  return dag;
}

Eigen::VectorXd random_theta(std::mt19937_64& rng, int count) {
  Eigen::VectorXd th(count);
  for (int i = 0; i < count; ++i) th[i] = -3.0 + 6.0 * uniform_real01(rng);
  return th;
}

PauliSum random_hamiltonian(std::mt19937_64& rng, int n) {
  PauliSum h;
  h.n_qubits = n;
  const char letters[4] = {'I', 'X', 'Y', 'Z'};
  const int terms = 2 + static_cast<int>(uniform_index(rng, 3));
  for (int t = 0; t < terms; ++t) {
    std::string word;
    for (int q = 0; q < n; ++q) word += letters[uniform_index(rng, 4)];
    h.terms.push_back({-1.0 + 2.0 * uniform_real01(rng), word});
  }
  return h;
}

Eigen::VectorXd fd_gradient(const CircuitDag& dag, const Eigen::VectorXd& theta,
                            const PauliSum& h, double step) {
  Eigen::VectorXd g(theta.size());
  for (Eigen::Index i = 0; i < theta.size(); ++i) {
    Eigen::VectorXd up = theta, down = theta;
    up[i] += step;
    down[i] -= step;
    g[i] = (expectation(run(dag, up), h) - expectation(run(dag, down), h)) / (2 * step);
  }
  return g;
}

// Every converged search in this binary passes through here, so each
// epsilon-Nash certificate is re-checked by the independent move enumerator.
SearchTrace certified_search(const Problem& prob, const Topology& topo, const SearchConfig& cfg,
                             const SeedStrategy& seed) {
  SearchTrace tr = nash_search(prob, topo, cfg, seed);
  if (tr.status == SearchStatus::converged_epsilon_nash) {
    const GameContext ctx = make_context(prob, topo, cfg);
    const NashResidual ref = residual_oracle::oracle_residual(tr.final_dag, tr.final_theta, ctx);
    CHECK(ref.delta_max <= cfg.epsilon + kCertSlack);
    CHECK(ref.delta_max == tr.final_residual.delta_max);
  }
  return tr;
}

std::vector<GateKind> spin_gate_set() {
  std::vector<GateKind> out;
  for (GateKind k : all_gate_kinds()) {
    if (k != GateKind::double_excitation) out.push_back(k);
  }
  return out;
}

double best_energy(const SearchTrace& tr, const PauliSum& h) {
  return expectation(run(tr.best_dag, tr.best_theta), h);
}

}  // namespace

TEST_CASE("criterion 1: simulator norm, parameter-shift gradients, and spectrum purity") {
  std::mt19937_64 rng(11);

  // norm preservation and shift-rule gradients on 50 random circuits
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(uniform_index(rng, 6));
    const CircuitDag dag = random_circuit(rng, n, 12, all_gate_kinds(), 12);
    const Eigen::VectorXd theta = random_theta(rng, dag.param_count);
    const Eigen::VectorXcd state = run(dag, theta);
    CHECK(std::abs(state.norm() - 1.0) <= kNormTol);

    if (dag.param_count == 0) continue;
    const PauliSum h = random_hamiltonian(rng, n);
    const Eigen::VectorXd exact = gradient(dag, theta, h);
    const Eigen::VectorXd approx = fd_gradient(dag, theta, h, 1e-5);
    CHECK((exact - approx).cwiseAbs().maxCoeff() <= kShiftVsFdTol);
  }

  // purity identity of the Pauli spectrum up to n = 8
  for (int n = 1; n <= 8; ++n) {
    const CircuitDag dag = random_circuit(rng, n, 14, all_gate_kinds());
    const Eigen::VectorXcd state = run(dag, random_theta(rng, dag.param_count));
    const Eigen::VectorXd spec = pauli_spectrum(state);
    CHECK(std::abs(spec.squaredNorm() - std::pow(2.0, n)) <= kPurityTol);
  }
}

TEST_CASE("criterion 2: stabilizer Renyi magic suite") {
  std::mt19937_64 rng(22);
  const std::vector<GateKind> clifford = {GateKind::h,  GateKind::x,    GateKind::y, GateKind::z,
                                          GateKind::s,  GateKind::cnot, GateKind::cz};

  // Clifford circuits carry no magic
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(uniform_index(rng, 6));
    const CircuitDag dag = random_circuit(rng, n, 16, clifford);
    CHECK(magic_m2(run(dag, {})) <= kMagicTol);
  }

  // one T gate on |+> gives log2(4/3)
  CircuitDag tplus(1);
  tplus.add_op(GateKind::h, {0});
  tplus.add_op(GateKind::t, {0});
  CHECK(std::abs(magic_m2(run(tplus, {})) - std::log2(4.0 / 3.0)) <= kMagicTol);

  // appending Cliffords never changes the measure
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(uniform_index(rng, 3));
    CircuitDag dag = random_circuit(rng, n, 8, all_gate_kinds());
    const Eigen::VectorXd theta = random_theta(rng, dag.param_count);
    const double before = magic_m2(run(dag, theta));
    for (int extra = 0; extra < 8; ++extra) {
      const GateKind k = clifford[uniform_index(rng, clifford.size())];
      if (gate_arity(k) > n) continue;
      dag.add_op(k, pick_qubits(rng, n, gate_arity(k)));
    }
    CHECK(std::abs(magic_m2(run(dag, theta)) - before) <= kMagicTol);
  }
}

TEST_CASE("criterion 3: QFIM and effective dimension suite") {
  std::mt19937_64 rng(33);

  // a single rx has unit information for any angle
  CircuitDag single(1);
  single.add_op(GateKind::rx, {0});
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::VectorXd th(1);
    th << -3.0 + 6.0 * uniform_real01(rng);
    const Eigen::MatrixXd f = qfim(single, th);
    REQUIRE(f.rows() == 1);
    CHECK(std::abs(f(0, 0) - 1.0) <= kQfimTol);
  }

  // symmetry, positive semidefiniteness, and the parameter-count cap
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(uniform_index(rng, 4));
    const CircuitDag dag = random_circuit(rng, n, 10, all_gate_kinds(), 8);
    const Eigen::VectorXd theta = random_theta(rng, dag.param_count);
    const Eigen::MatrixXd f = qfim(dag, theta);
    if (f.rows() > 0) {
      CHECK((f - f.transpose()).cwiseAbs().maxCoeff() == 0.0);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(f);
      CHECK(es.eigenvalues().minCoeff() >= kEigFloor);
    }
    CHECK(eff_dim(dag, theta) <= dag.param_count);
  }

  // duplicated generators collapse to rank one
  CircuitDag dup(1);
  dup.add_op(GateKind::h, {0});
  dup.add_op(GateKind::rz, {0});
  dup.add_op(GateKind::rz, {0});
  Eigen::VectorXd th(2);
  th << 0.4, -1.1;
  CHECK(eff_dim(dup, th) == 1.0);
}

TEST_CASE("criterion 4: epsilon-Nash certificates survive brute-force re-enumeration") {
  // residual equals a separately coded oracle exactly on 50 random dags
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(uniform_index(rng, 3));
    const Problem prob = trial % 2 == 0 ? maxcut_problem(Graph::complete(n))
                                        : tfim_problem(n, 1.0);
    SearchConfig cfg;
    cfg.weights = {1.0, 1.0, 1.0, 0.25};
    if (trial % 5 == 0) {
      cfg.weights = {0.5, 2.0, 1.0, 0.25};
      cfg.delta_weighted = true;
    }
    const Topology topo = Topology::all_to_all(n);
    const GameContext ctx = make_context(prob, topo, cfg);
    const CircuitDag dag = random_circuit(rng, n, 12, all_gate_kinds());
    const Eigen::VectorXd theta = random_theta(rng, dag.param_count);

    const NashResidual got = nash_residual(dag, theta, ctx);
    const NashResidual ref = residual_oracle::oracle_residual(dag, theta, ctx);
    CHECK(got.delta_max == ref.delta_max);
    for (int p = 0; p < 4; ++p) CHECK(got.per_player[p] == ref.per_player[p]);
  }

  // a weighted configuration that does converge, so the certificate path is
  // genuinely exercised (certified_search re-enumerates on convergence)
  const Problem prob = maxcut_problem(Graph::complete(4));
  const Topology topo = Topology::all_to_all(4);
  SearchConfig cfg;
  cfg.weights = {0.01, 0.0, 1.0, 0.01};
  cfg.epsilon = 0.05;
  cfg.outer_iters = 20;
  cfg.inner_steps = 150;
  cfg.inner_rate = 0.1;
  cfg.proposals_per_iter = 8;
  cfg.delta_weighted = true;
  int converged = 0;
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    cfg.rng_seed = seed;
    const SearchTrace tr = certified_search(prob, topo, cfg, SeedStrategy::qaoa_p1());
    if (tr.status == SearchStatus::converged_epsilon_nash) ++converged;
  }
  CHECK(converged == 3);
}

TEST_CASE("criterion 5: MaxCut K4 search reaches the Clifford endpoint (0, 4.00)") {
  const Problem prob = maxcut_problem(Graph::complete(4));
  const Topology topo = Topology::all_to_all(4);
  SearchConfig cfg;
  cfg.weights = {0.0, 0.0, 1.0, 0.1};  // magic weight zero per the criterion
  cfg.outer_iters = 15;
  cfg.inner_steps = 300;
  cfg.inner_rate = 0.1;
  cfg.proposals_per_iter = 8;

  int hits = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    cfg.rng_seed = seed;
    const SearchTrace tr = certified_search(prob, topo, cfg, SeedStrategy::qaoa_p1());
    const Eigen::VectorXcd state = run(tr.best_dag, tr.best_theta);
    const double task = task_payoff(state, prob.hamiltonian, prob.sense);
    const double m2n = magic_m2(state) / 4.0;
    if (std::abs(task - 4.0) <= kTaskTol && m2n <= kMagicTol) ++hits;
  }
  CHECK(hits >= 1);
}

TEST_CASE("criterion 6: sixteen-corner sweep returns an undominated frontier with both endpoints") {
  const Problem prob = maxcut_problem(Graph::complete(4));
  const Topology topo = Topology::all_to_all(4);
  SearchConfig cfg;
  cfg.weights = {0.0, 0.0, 1.0, 0.1};  // overridden per corner
  cfg.outer_iters = 15;
  cfg.inner_steps = 300;
  cfg.inner_rate = 0.1;
  cfg.proposals_per_iter = 8;

  std::vector<Weights> corners;
  for (int i = 0; i < 16; ++i) corners.push_back({0.0, 0.2 * i, 1.0, 0.1});
  const std::vector<FrontierPoint> points =
      weight_sweep(prob, topo, corners, cfg, SeedStrategy::qaoa_p1(), {1, 2, 3});
  REQUIRE(points.size() == 16);
  const std::vector<FrontierPoint> front = pareto_front(points);
  REQUIRE(!front.empty());

  // exact pairwise dominance re-check, written out longhand
  auto dominated_within = [](const FrontierPoint& p, const std::vector<FrontierPoint>& all) {
    for (const auto& q : all) {
      if (q.m2_per_n >= p.m2_per_n && q.task_value >= p.task_value &&
          (q.m2_per_n > p.m2_per_n || q.task_value > p.task_value)) {
        return true;
      }
    }
    return false;
  };
  bool any_high_magic = false;
  bool any_cliffordish = false;
  for (const auto& p : front) {
    CHECK_FALSE(dominated_within(p, points));
    if (p.m2_per_n >= kFrontierHighMagic) any_high_magic = true;
    if (p.m2_per_n <= kMagicTol) any_cliffordish = true;
  }
  CHECK(any_high_magic);
  CHECK(any_cliffordish);
}

TEST_CASE("criterion 7: warm starts beat cold starts on TFIM at n = 4, 6, 8") {
  SearchConfig cfg;
  cfg.weights = {0.1, 0.0, 1.0, 0.01};
  cfg.outer_iters = 15;
  cfg.inner_steps = 300;
  cfg.inner_rate = 0.05;
  cfg.proposals_per_iter = 8;
  cfg.gate_set = spin_gate_set();

  for (const int n : {4, 6, 8}) {
    const Problem prob = tfim_problem(n, 1.0);
    const Topology topo = Topology::all_to_all(n);
    const double ground = exact_ground_energy(prob.hamiltonian).energy;
    REQUIRE(ground < 0.0);

    double mean_err[2] = {0.0, 0.0};  // warm, cold
    const SeedStrategy strategies[2] = {SeedStrategy::qaoa_p1(), SeedStrategy::cold()};
    for (int s = 0; s < 2; ++s) {
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        cfg.rng_seed = seed;
        const SearchTrace tr = certified_search(prob, topo, cfg, strategies[s]);
        mean_err[s] += (best_energy(tr, prob.hamiltonian) - ground) / std::abs(ground);
      }
      mean_err[s] /= 5.0;
    }
    if (n == 4) CHECK(mean_err[0] <= kRelErrCap);
    CHECK(mean_err[0] < mean_err[1]);
  }
}

TEST_CASE("criterion 8: head-to-head bench emits every column with validated statistics") {
  ExperimentConfig cfg;
  cfg.problem = maxcut_problem(Graph::complete(4));
  cfg.bench_topologies = {"all_to_all", "heavy_hex4", "grid2x2"};
  cfg.search.weights = {0.5, 0.5, 1.0, 0.1};
  cfg.search.outer_iters = 6;
  cfg.search.inner_steps = 80;
  cfg.search.inner_rate = 0.1;
  cfg.search.proposals_per_iter = 6;
  cfg.seed = SeedStrategy::qaoa_p1();
  cfg.rng_seeds = {1, 2, 3, 4, 5};
  cfg.ceiling_phi = 5.0;
  cfg.output = "/tmp/qcnash_acceptance_bench.json";

  const nlohmann::json doc = cmd_bench(cfg);
  REQUIRE(doc["rows"].size() == 3);
  for (const auto& row : doc["rows"]) {
    REQUIRE(row["per_seed"].size() == 5);
    const auto& st = row["stats"];
    for (const char* summary : {"nash_phi", "baseline_phi"}) {
      for (const char* field : {"mean", "sd", "median", "min", "max"}) {
        CHECK_MESSAGE(st[summary].contains(field), summary << " lacks " << field);
      }
    }
    CHECK(st.contains("delta_phi_mean"));
    CHECK(st["delta_phi_ci95"].is_array());
    CHECK(st["wilcoxon_p"].is_number());
    CHECK(st["cohens_dz"].is_number());
    CHECK(st["ceiling_threshold"].is_number());
    CHECK(st["ceiling_hits_nash"].is_number_integer());
    CHECK(st["ceiling_hits_baseline"].is_number_integer());
  }

  // the statistics behind those columns, on worked hand cases
  CHECK(std::abs(wilcoxon_paired_onesided({1.0, 2.0, 3.0}, {0.0, 0.0, 0.0}) - kWilcoxonRef) <=
        kStatRefTol);
  CHECK(std::abs(cohens_dz({1.0, 1.0, 1.0, 1.0, 3.0}, {0.0, 0.0, 0.0, 0.0, 0.0}) - kDzRef) <=
        kStatRefTol);
}

TEST_CASE("criterion 9: reference per-seed mean computations are exact") {
  CHECK(summarize({0.10, 0.02, 0.10, 0.20, 0.05}).mean == kMeanRefA);
  CHECK(summarize({0.20, 0.005, 0.03, 0.03, 0.04}).mean == kMeanRefB);
}

TEST_CASE("criterion 10: chemistry reaches chemical accuracy and Givens seeding beats Hartree-Fock") {
  // the bundled two-qubit fixture must sit at the reference energy
  Problem h2;
  h2.hamiltonian = parse_pauli_file(slurp(data_path("h2_sto3g_2q.txt")));
  h2.sense = TaskSense::minimize_expectation;
  h2.label = "h2_sto3g_2q";
  const double exact = exact_ground_energy(h2.hamiltonian).energy;
  REQUIRE(std::abs(exact - kH2Reference) <= kH2ReferenceTol);

  // the search itself gets within chemical accuracy on at least one seed
  SearchConfig cfg;
  cfg.weights = {0.1, 0.0, 1.0, 0.01};
  cfg.outer_iters = 15;
  cfg.inner_steps = 300;
  cfg.inner_rate = 0.1;
  cfg.proposals_per_iter = 8;
  int hits = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    cfg.rng_seed = seed;
    const SearchTrace tr = certified_search(h2, Topology::all_to_all(2), cfg, SeedStrategy::qaoa_p1());
    if (best_energy(tr, h2.hamiltonian) - exact <= kChemAccuracy) ++hits;
  }
  CHECK(hits >= 1);

  // Givens seeding on the four-qubit encoding: polishing the excitation angle
  // strictly lowers the energy below the Hartree-Fock determinant
  Problem jw;
  jw.hamiltonian = parse_pauli_file(slurp(data_path("h2_sto3g_jw4.txt")));
  jw.sense = TaskSense::minimize_expectation;
  jw.label = "h2_sto3g_jw4";
  auto [dag, theta0] = make_seed(SeedStrategy::givens({0, 1}, {{{0, 1, 2, 3}}}), jw,
                                 Topology::all_to_all(4));
  const double hartree_fock = expectation(run(dag, theta0), jw.hamiltonian);
  SearchConfig polish;
  polish.weights = {0.0, 0.0, 1.0, 0.0};
  polish.inner_steps = 300;
  polish.inner_rate = 0.2;
  const Eigen::VectorXd theta = inner_gd(dag, theta0, jw, polish);
  const double optimized = expectation(run(dag, theta), jw.hamiltonian);
  CHECK(optimized < hartree_fock - 1e-6);
  CHECK(optimized >= exact_ground_energy(jw.hamiltonian).energy - 1e-9);
}

TEST_CASE("criterion 11: identical configs reproduce results bit-exactly") {
  auto strip = [](nlohmann::json doc) {
    doc.erase("timestamp");
    return doc.dump();
  };

  ExperimentConfig run_cfg;
  run_cfg.problem = maxcut_problem(Graph::complete(4));
  run_cfg.topology_name = "all_to_all";
  run_cfg.search.weights = {1.0, 1.0, 1.0, 0.1};
  run_cfg.search.outer_iters = 4;
  run_cfg.search.inner_steps = 60;
  run_cfg.seed = SeedStrategy::qaoa_p1();
  run_cfg.rng_seeds = {1, 2};
  run_cfg.output = "/tmp/qcnash_acceptance_det.json";
  CHECK(strip(cmd_run(run_cfg)) == strip(cmd_run(run_cfg)));

  ExperimentConfig sweep_cfg = run_cfg;
  sweep_cfg.corners = {{1.0, 0.0, 1.0, 0.1}, {0.0, 1.0, 1.0, 0.1}};
  sweep_cfg.rng_seeds = {1};
  CHECK(strip(cmd_sweep(sweep_cfg)) == strip(cmd_sweep(sweep_cfg)));

  ExperimentConfig bench_cfg = run_cfg;
  bench_cfg.topology_name.clear();
  bench_cfg.bench_topologies = {"heavy_hex4"};
  bench_cfg.rng_seeds = {1, 2, 3};
  CHECK(strip(cmd_bench(bench_cfg)) == strip(cmd_bench(bench_cfg)));
}
