#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "qcnash/circuit.hpp"
#include "qcnash/common.hpp"

using namespace qcnash;

namespace {

bool has_code(const std::vector<Diagnostic>& ds, DiagnosticCode code) {
  return std::any_of(ds.begin(), ds.end(), [&](const Diagnostic& d) { return d.code == code; });
}

}  // namespace

TEST_CASE("gate metadata") {
  CHECK(gate_arity(GateKind::h) == 1);
  CHECK(gate_arity(GateKind::rzz) == 2);
  CHECK(gate_arity(GateKind::cnot) == 2);
  CHECK(gate_arity(GateKind::double_excitation) == 4);

  CHECK(gate_parameterized(GateKind::rx));
  CHECK(gate_parameterized(GateKind::rzz));
  CHECK(gate_parameterized(GateKind::double_excitation));
  CHECK_FALSE(gate_parameterized(GateKind::t));
  CHECK_FALSE(gate_parameterized(GateKind::cnot));

  CHECK(gate_clifford(GateKind::s));
  CHECK(gate_clifford(GateKind::cz));
  CHECK_FALSE(gate_clifford(GateKind::t));
  CHECK_FALSE(gate_clifford(GateKind::rz));

  CHECK(gate_name(GateKind::tdg) == "tdg");
  CHECK(gate_from_name("double_excitation") == GateKind::double_excitation);
  CHECK_FALSE(gate_from_name("toffoli").has_value());
  CHECK(all_gate_kinds().size() == static_cast<std::size_t>(kGateKindCount));
}

TEST_CASE("add_op assigns ids and dense param slots") {
  CircuitDag d(3);
  const int a = d.add_op(GateKind::h, {0});
  const int b = d.add_op(GateKind::rx, {1});
  const int c = d.add_op(GateKind::rzz, {0, 1});
  CHECK(a != b);
  CHECK(d.param_count == 2);
  CHECK_FALSE(d.find(a)->param_slot.has_value());
  CHECK(*d.find(b)->param_slot == 0);
  CHECK(*d.find(c)->param_slot == 1);
  CHECK(d.find(999) == nullptr);

  CHECK_THROWS_AS(d.add_op(GateKind::h, {3}), std::invalid_argument);
  CHECK_THROWS_AS(d.add_op(GateKind::cnot, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(d.add_op(GateKind::cnot, {0}), std::invalid_argument);
}

TEST_CASE("insert_op renumbers slots in list order") {
  CircuitDag d(2);
  d.add_op(GateKind::rx, {0});
  d.add_op(GateKind::ry, {1});
  d.insert_op(0, GateKind::rz, {0});
  REQUIRE(d.param_count == 3);
  CHECK(d.ops[0].kind == GateKind::rz);
  CHECK(*d.ops[0].param_slot == 0);
  CHECK(*d.ops[1].param_slot == 1);
  CHECK(*d.ops[2].param_slot == 2);
  CHECK_THROWS_AS(d.insert_op(99, GateKind::h, {0}), std::invalid_argument);
}

TEST_CASE("renumber_params after manual removal") {
  CircuitDag d(2);
  d.add_op(GateKind::rx, {0});
  d.add_op(GateKind::ry, {1});
  d.add_op(GateKind::rz, {0});
  d.ops.erase(d.ops.begin() + 1);
  CHECK(d.renumber_params() == 2);
  CHECK(*d.ops[0].param_slot == 0);
  CHECK(*d.ops[1].param_slot == 1);
}

TEST_CASE("validate accepts a legal circuit") {
  Topology topo(3, {{0, 1}, {1, 2}});
  CircuitDag d(3);
  d.add_op(GateKind::h, {0});
  d.add_op(GateKind::cnot, {0, 1});
  d.add_op(GateKind::rzz, {2, 1});  // unordered edge
  CHECK(validate(d, topo).empty());
}

TEST_CASE("validate flags non-edges and param corruption") {
  Topology path(3, {{0, 1}, {1, 2}});
  CircuitDag d(3);
  d.add_op(GateKind::cnot, {0, 2});
  auto ds = validate(d, path);
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].code == DiagnosticCode::non_edge);
  CHECK(ds[0].node_id == d.ops[0].id);

  CircuitDag bad(3);
  bad.add_op(GateKind::rx, {0});
  bad.ops[0].param_slot = 5;
  CHECK(has_code(validate(bad, path), DiagnosticCode::bad_param_numbering));

  CircuitDag stray(3);
  stray.add_op(GateKind::h, {0});
  stray.ops[0].param_slot = 0;
  CHECK(has_code(validate(stray, path), DiagnosticCode::bad_param_numbering));

  CircuitDag oob(3);
  oob.add_op(GateKind::h, {0});
  oob.ops[0].qubits[0] = 7;  // corrupt after construction
  CHECK(has_code(validate(oob, path), DiagnosticCode::qubit_out_of_range));

  CircuitDag dup(3);
  dup.add_op(GateKind::cnot, {0, 1});
  dup.ops[0].qubits[1] = 0;
  CHECK(has_code(validate(dup, path), DiagnosticCode::duplicate_qubit));

  CHECK_THROWS_AS(validate(CircuitDag(2), path), usage_error);
}

TEST_CASE("double excitation needs all six couplings") {
  CircuitDag d(4);
  d.add_op(GateKind::double_excitation, {0, 1, 2, 3});
  CHECK(validate(d, Topology::all_to_all(4)).empty());

  Topology ring(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  auto ds = validate(d, ring);
  CHECK(ds.size() == 2);  // (0,2) and (1,3) are missing
  CHECK(has_code(ds, DiagnosticCode::non_edge));
}

TEST_CASE("depth counts greedy wire layers") {
  CircuitDag d(3);
  CHECK(depth(d) == 0);
  d.add_op(GateKind::h, {0});
  d.add_op(GateKind::h, {1});
  d.add_op(GateKind::h, {2});
  CHECK(depth(d) == 1);
  d.add_op(GateKind::cnot, {0, 1});
  CHECK(depth(d) == 2);
  d.add_op(GateKind::cnot, {1, 2});
  CHECK(depth(d) == 3);
  d.add_op(GateKind::rx, {0});
  CHECK(depth(d) == 3);  // fits beside the second cnot
}

TEST_CASE("lower preserves list order") {
  CircuitDag d(2);
  d.add_op(GateKind::h, {0});
  d.add_op(GateKind::cnot, {0, 1});
  auto ops = lower(d);
  REQUIRE(ops.size() == 2);
  CHECK(ops[0].kind == GateKind::h);
  CHECK(ops[1].kind == GateKind::cnot);
}

TEST_CASE("serialize/deserialize round trip") {
  CircuitDag d(3);
  d.add_op(GateKind::h, {0});
  d.add_op(GateKind::rx, {1});
  d.add_op(GateKind::rzz, {0, 2});
  d.add_op(GateKind::cnot, {2, 1});
  Eigen::VectorXd theta(2);
  theta << 0.25, -1.5;

  const auto back = deserialize(serialize(d, theta));
  CHECK(back.dag == d);
  REQUIRE(back.theta.size() == 2);
  CHECK(back.theta[0] == 0.25);
  CHECK(back.theta[1] == -1.5);

  // without theta all parameters come back as zero
  const auto bare = deserialize(serialize(d));
  CHECK(bare.dag == d);
  CHECK(bare.theta.isZero(0.0));
}

TEST_CASE("deserialize rejects malformed input") {
  CHECK_THROWS_AS(deserialize("not json"), usage_error);
  CHECK_THROWS_AS(deserialize("[1,2]"), usage_error);
  CHECK_THROWS_AS(deserialize(R"({"n_qubits": 2, "ops": [], "extra": 1})"), usage_error);
  CHECK_THROWS_AS(deserialize(R"({"n_qubits": 0, "ops": []})"), usage_error);
  CHECK_THROWS_AS(deserialize(R"({"n_qubits": 2})"), usage_error);
  CHECK_THROWS_AS(
      deserialize(R"({"n_qubits": 2, "ops": [{"kind": "ccx", "qubits": [0]}]})"), usage_error);
  CHECK_THROWS_AS(
      deserialize(R"({"n_qubits": 2, "ops": [{"kind": "h", "qubits": [0], "theta": 1.0}]})"),
      usage_error);
  CHECK_THROWS_AS(
      deserialize(R"({"n_qubits": 2, "ops": [{"kind": "h", "qubits": [0], "color": "red"}]})"),
      usage_error);
  CHECK_THROWS_AS(deserialize(R"({"n_qubits": 2, "ops": [{"kind": "h", "qubits": [5]}]})"),
                  usage_error);
  CHECK_THROWS_AS(deserialize(R"({"n_qubits": 2, "ops": [{"kind": "cnot", "qubits": [0]}]})"),
                  usage_error);
}

TEST_CASE("structural equality ignores node ids") {
  CircuitDag a(2);
  a.add_op(GateKind::h, {0});
  a.add_op(GateKind::rx, {1});

  CircuitDag b(2);
  b.add_op(GateKind::x, {0});  // burn an id, then rebuild
  b.ops.clear();
  b.renumber_params();
  b.add_op(GateKind::h, {0});
  b.add_op(GateKind::rx, {1});
  CHECK(a == b);

  b.ops[1].qubits[0] = 0;
  CHECK_FALSE(a == b);
}

TEST_CASE("topology helpers") {
  const Topology t = Topology::all_to_all(4);
  CHECK(t.edges.size() == 6);
  CHECK(t.has_edge(3, 1));

  Topology u(3, {{2, 0}});
  CHECK(u.has_edge(0, 2));
  CHECK_FALSE(u.has_edge(0, 1));
  CHECK_THROWS_AS(u.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(u.add_edge(0, 9), std::invalid_argument);
}
