#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "qcnash/circuit.hpp"

using nlohmann::json;

namespace {

std::string cli_path() {
  const char* p = std::getenv("QCNASH_CLI");
  REQUIRE_MESSAGE(p != nullptr, "QCNASH_CLI must point at the binary");
  return p;
}

std::string data_dir() {
  const char* p = std::getenv("QCNASH_DATA");
  REQUIRE_MESSAGE(p != nullptr, "QCNASH_DATA must point at the data directory");
  return p;
}

struct CliResult {
  int exit_code = -1;
  std::string text;  // stdout and stderr interleaved
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = cli_path() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[512];
  while (std::fgets(buf, sizeof(buf), pipe)) r.text += buf;
  const int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  r.exit_code = WEXITSTATUS(status);
  return r;
}

std::string write_file(const std::string& name, const std::string& text) {
  const std::string path = "/tmp/qcnash_cfg_" + name;  // distinct from output paths
  std::ofstream out(path);
  out << text;
  return path;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "expected file " << path);
  json doc;
  in >> doc;
  return doc;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string small_run_config(const std::string& output) {
  json cfg = {
      {"problem", {{"kind", "maxcut"}, {"n", 3}}},
      {"topology", "all_to_all"},
      {"search",
       {{"weights", {1.0, 1.0, 1.0, 0.1}},
        {"outer_iters", 2},
        {"inner_steps", 20},
        {"proposals_per_iter", 4}}},
      {"seed_strategy", {{"kind", "qaoa_p1"}}},
      {"rng_seeds", {1, 2}},
      {"method", "nash"},
      {"output", output},
  };
  return cfg.dump(2);
}

}  // namespace

TEST_CASE("help exits zero") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("run --help").exit_code == 0);
  CHECK(run_cli("oracle --help").exit_code == 0);
}

TEST_CASE("bad invocations exit one") {
  CHECK(run_cli("").exit_code == 1);                 // a subcommand is required
  CHECK(run_cli("frobnicate").exit_code == 1);       // unknown subcommand
  CHECK(run_cli("run").exit_code == 1);              // missing --config
  CHECK(run_cli("run --no-such-flag").exit_code == 1);
  CHECK(run_cli("run -c /tmp/qcnash_missing_config.json").exit_code == 1);

  const std::string bad = write_file("bad.json", "{ not json");
  CHECK(run_cli("run -c " + bad).exit_code == 1);

  const std::string cfgpath = write_file("okc.json", small_run_config("/tmp/qcnash_cli_okc.out"));
  CHECK(run_cli("run -c " + cfgpath + " --weights 1,2").exit_code == 1);  // needs four
  CHECK(run_cli("run -c " + cfgpath + " --method sideways").exit_code == 1);
}

TEST_CASE("unknown config fields are named in the error") {
  json cfg = json::parse(small_run_config("/tmp/qcnash_cli_uf.out"));
  cfg["search"]["outer_loops"] = 3;
  const std::string path = write_file("unknown_field.json", cfg.dump());
  const CliResult r = run_cli("run -c " + path);
  CHECK(r.exit_code == 1);
  CHECK(r.text.find("outer_loops") != std::string::npos);
}

TEST_CASE("a missing hamiltonian file fails before any output is written") {
  const std::string out_path = "/tmp/qcnash_cli_should_not_exist.json";
  std::filesystem::remove(out_path);
  json cfg = {
      {"problem",
       {{"kind", "pauli_file"}, {"path", "/tmp/qcnash_no_such_ham.txt"}, {"sense", "minimize"}}},
      {"topology", "all_to_all"},
      {"search", {{"weights", {1.0, 1.0, 1.0, 0.1}}, {"outer_iters", 1}}},
      {"rng_seeds", {1}},
      {"output", out_path},
  };
  const std::string path = write_file("missing_ham.json", cfg.dump());
  CHECK(run_cli("run -c " + path).exit_code == 1);
  CHECK_FALSE(std::filesystem::exists(out_path));
}

TEST_CASE("oracle matches the known ground energies") {
  const std::string out = "/tmp/qcnash_cli_oracle.json";

  REQUIRE(run_cli("oracle --builtin tfim -n 4 -g 1.0 -o " + out).exit_code == 0);
  CHECK(read_json(out)["ground_energy"].get<double>() ==
        doctest::Approx(-5.226251859505502).epsilon(1e-9));

  REQUIRE(run_cli("oracle --builtin maxcut_complete -n 4 -o " + out).exit_code == 0);
  CHECK(std::abs(read_json(out)["ground_energy"].get<double>()) < 1e-9);

  REQUIRE(run_cli("oracle -f " + data_dir() + "/h2_sto3g_2q.txt -o " + out).exit_code == 0);
  const json h2 = read_json(out);
  CHECK(h2["ground_energy"].get<double>() == doctest::Approx(-1.1372701749).epsilon(1e-8));
  CHECK(h2["n_qubits"].get<int>() == 2);
}

TEST_CASE("oracle evaluates a circuit against the ground truth") {
  const std::string ham = write_file("z1.txt", "1.0 Z\n");

  qcnash::CircuitDag dag(1);
  dag.add_op(qcnash::GateKind::rx, {0});
  Eigen::VectorXd theta(1);
  theta << M_PI;
  const std::string circ = write_file("rx_pi.json", qcnash::serialize(dag, theta));

  const std::string out = "/tmp/qcnash_cli_oracle_circ.json";
  REQUIRE(run_cli("oracle -f " + ham + " --circuit " + circ + " -o " + out).exit_code == 0);
  const json doc = read_json(out);
  CHECK(doc["ground_energy"].get<double>() == doctest::Approx(-1.0));
  CHECK(doc["circuit_energy"].get<double>() == doctest::Approx(-1.0));
  CHECK(std::abs(doc["gap"].get<double>()) < 1e-9);

  // mismatched sizes are a usage error
  const std::string ham2 = write_file("zz.txt", "1.0 ZZ\n");
  CHECK(run_cli("oracle -f " + ham2 + " --circuit " + circ).exit_code == 1);
}

TEST_CASE("oracle refuses oversized problems with the capability code") {
  const std::string big = write_file("big.txt", "1.0 ZZZZZZZZZZZ\n");  // 11 qubits
  CHECK(run_cli("oracle -f " + big).exit_code == 2);
}

TEST_CASE("run writes a result that stats can recompute") {
  const std::string out_a = "/tmp/qcnash_cli_run_a.json";
  const std::string path = write_file("run_a.json", small_run_config(out_a));
  REQUIRE(run_cli("run -c " + path).exit_code == 0);

  const json doc = read_json(out_a);
  CHECK(doc["schema_version"].get<int>() == 1);
  CHECK(doc["command"] == "run");
  REQUIRE(doc["results"].size() == 2);
  CHECK(doc["results"][0]["rng_seed"].get<std::uint64_t>() == 1);
  CHECK(doc["results"][0]["trace"]["iterations"].size() == 2);
  CHECK(doc["aggregate"].contains("best_phi"));

  const std::string out_b = "/tmp/qcnash_cli_stats_b.json";
  REQUIRE(run_cli("stats " + out_a + " -o " + out_b).exit_code == 0);
  const json re = read_json(out_b);
  CHECK(re["command"] == "stats");
  CHECK(re["source_command"] == "run");
  CHECK(re["aggregate"] == doc["aggregate"]);
}

TEST_CASE("identical runs are byte identical apart from the timestamp") {
  const std::string out = "/tmp/qcnash_cli_det.json";
  const std::string path = write_file("det.json", small_run_config(out));

  REQUIRE(run_cli("run -c " + path).exit_code == 0);
  const std::string first = slurp(out);
  REQUIRE(run_cli("run -c " + path).exit_code == 0);
  const std::string second = slurp(out);

  json a = json::parse(first);
  json b = json::parse(second);
  a.erase("timestamp");
  b.erase("timestamp");
  CHECK(a.dump() == b.dump());
}

TEST_CASE("flag overrides land in the echoed config") {
  const std::string out = "/tmp/qcnash_cli_ovr.json";
  const std::string path = write_file("ovr.json", small_run_config(out));
  REQUIRE(run_cli("run -c " + path + " --outer-iters 0 --rng-seeds 5 --epsilon 0.25").exit_code ==
          0);
  const json doc = read_json(out);
  CHECK(doc["config"]["search"]["outer_iters"].get<int>() == 0);
  CHECK(doc["config"]["search"]["epsilon"].get<double>() == 0.25);
  REQUIRE(doc["results"].size() == 1);
  CHECK(doc["results"][0]["rng_seed"].get<std::uint64_t>() == 5);
  CHECK(doc["results"][0]["trace"]["iterations"].empty());
  CHECK(doc["results"][0]["trace"]["status"] == "budget_exhausted");
}

TEST_CASE("sweep emits points and a frontier") {
  const std::string out = "/tmp/qcnash_cli_sweep.json";
  json cfg = {
      {"problem", {{"kind", "maxcut"}, {"n", 3}}},
      {"topology", "all_to_all"},
      {"search",
       {{"weights", {1.0, 1.0, 1.0, 0.1}}, {"outer_iters", 2}, {"inner_steps", 20}}},
      {"seed_strategy", {{"kind", "qaoa_p1"}}},
      {"rng_seeds", {1}},
      {"corners", {{1.0, 0.0, 1.0, 0.1}, {0.0, 1.0, 1.0, 0.1}}},
      {"output", out},
  };
  const std::string path = write_file("sweep.json", cfg.dump());
  REQUIRE(run_cli("sweep -c " + path).exit_code == 0);
  const json doc = read_json(out);
  CHECK(doc["command"] == "sweep");
  REQUIRE(doc["points"].size() == 2);
  CHECK(doc["front"].size() >= 1);
  for (const auto& idx : doc["front"]) {
    CHECK(doc["points"][idx.get<std::size_t>()]["on_front"].get<bool>());
  }
  for (const auto& p : doc["points"]) {
    CHECK(p.contains("m2_per_n"));
    CHECK(p.contains("task_value"));
    CHECK(p.contains("circuit"));
  }

  const std::string re_out = "/tmp/qcnash_cli_sweep_stats.json";
  REQUIRE(run_cli("stats " + out + " -o " + re_out).exit_code == 0);
  CHECK(read_json(re_out)["front"] == doc["front"]);
}

TEST_CASE("bench produces paired statistics per topology") {
  const std::string out = "/tmp/qcnash_cli_bench.json";
  json cfg = {
      {"problem", {{"kind", "maxcut"}, {"n", 4}}},
      {"topologies", {"all_to_all", "heavy_hex4"}},
      {"search",
       {{"weights", {1.0, 1.0, 1.0, 0.1}}, {"outer_iters", 2}, {"inner_steps", 15}}},
      {"seed_strategy", {{"kind", "cold"}}},
      {"rng_seeds", {1, 2, 3}},
      {"output", out},
  };
  const std::string path = write_file("bench.json", cfg.dump());
  REQUIRE(run_cli("bench -c " + path).exit_code == 0);
  const json doc = read_json(out);
  CHECK(doc["command"] == "bench");
  REQUIRE(doc["rows"].size() == 2);
  for (const auto& row : doc["rows"]) {
    CHECK(row["paired_seeds"].size() == 3);
    CHECK(row["per_seed"].size() == 3);
    const json& st = row["stats"];
    for (const char* key : {"nash_phi", "baseline_phi", "delta_phi_mean", "delta_phi_ci95",
                            "wilcoxon_p", "cohens_dz"}) {
      CHECK_MESSAGE(st.contains(key), "missing stats field " << key);
    }
    for (const auto& seed : row["per_seed"]) {
      CHECK(seed["nash"].contains("best"));
      CHECK(seed["baseline"].contains("best"));
    }
  }

  const std::string re_out = "/tmp/qcnash_cli_bench_stats.json";
  REQUIRE(run_cli("stats " + out + " -o " + re_out).exit_code == 0);
  const json re = read_json(re_out);
  REQUIRE(re["rows"].size() == 2);
  CHECK(re["rows"][0]["stats"]["delta_phi_mean"] == doc["rows"][0]["stats"]["delta_phi_mean"]);
}

TEST_CASE("stats rejects what it cannot recompute") {
  CHECK(run_cli("stats /tmp/qcnash_cli_not_there.json").exit_code == 1);
  const std::string garbled = write_file("garbled.json", "][");
  CHECK(run_cli("stats " + garbled).exit_code == 1);
  const std::string alien = write_file("alien.json", R"({"command": "oracle"})");
  CHECK(run_cli("stats " + alien).exit_code == 1);
}
