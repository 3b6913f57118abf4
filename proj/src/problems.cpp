#include "qcnash/problems.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>

#include "qcnash/common.hpp"

namespace qcnash {

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> e) : n_vertices(n) {
  for (const auto& [a, b] : e) add_edge(a, b);
}

Graph Graph::complete(int n) {
  Graph g;
  g.n_vertices = n;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) g.edges.emplace(a, b);
  }
  return g;
}

void Graph::add_edge(int a, int b) {
  if (a == b) throw std::invalid_argument("self-loop edge");
  if (a < 0 || b < 0 || a >= n_vertices || b >= n_vertices) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  edges.emplace(std::min(a, b), std::max(a, b));
}

Problem maxcut_problem(const Graph& g) {
  std::vector<PauliTerm> terms;
  const std::string id(static_cast<std::size_t>(g.n_vertices), 'I');
  terms.push_back({0.5 * static_cast<double>(g.edges.size()), id});
  for (const auto& [a, b] : g.edges) {
    std::string word = id;
    word[static_cast<std::size_t>(a)] = 'Z';
    word[static_cast<std::size_t>(b)] = 'Z';
    terms.push_back({-0.5, word});
  }
  Problem p;
  p.hamiltonian = make_pauli_sum(g.n_vertices, std::move(terms));
  p.sense = TaskSense::maximize_expectation;
  p.label = "maxcut(n=" + std::to_string(g.n_vertices) +
            ",edges=" + std::to_string(g.edges.size()) + ")";
  return p;
}

Problem tfim_problem(int n, double g) {
  if (n < 2) throw usage_error("tfim needs n >= 2, got " + std::to_string(n));
  const std::string id(static_cast<std::size_t>(n), 'I');
  std::set<std::pair<int, int>> bonds;
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    bonds.emplace(std::min(i, j), std::max(i, j));
  }
  std::vector<PauliTerm> terms;
  for (const auto& [a, b] : bonds) {
    std::string word = id;
    word[static_cast<std::size_t>(a)] = 'Z';
    word[static_cast<std::size_t>(b)] = 'Z';
    terms.push_back({-1.0, word});
  }
  for (int i = 0; i < n; ++i) {
    std::string word = id;
    word[static_cast<std::size_t>(i)] = 'X';
    terms.push_back({-g, word});
  }
  Problem p;
  p.hamiltonian = make_pauli_sum(n, std::move(terms));
  p.sense = TaskSense::minimize_expectation;
  std::ostringstream label;
  label << "tfim(n=" << n << ",g=" << g << ")";
  p.label = label.str();
  return p;
}

PauliSum parse_pauli_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<PauliTerm> terms;
  int n = -1;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string coeff_text, word, extra;
    if (!(fields >> coeff_text)) continue;  // blank line
    if (!(fields >> word)) {
      throw usage_error("line " + std::to_string(line_no) + ": expected '<coefficient> <word>'");
    }
    if (fields >> extra) {
      throw usage_error("line " + std::to_string(line_no) + ": trailing text '" + extra + "'");
    }
    double coeff = 0.0;
    std::size_t used = 0;
    try {
      coeff = std::stod(coeff_text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != coeff_text.size()) {
      throw usage_error("line " + std::to_string(line_no) + ": bad coefficient '" + coeff_text +
                        "'");
    }
    for (char c : word) {
      if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
        throw usage_error("line " + std::to_string(line_no) + ": bad character '" +
                          std::string(1, c) + "' in Pauli word '" + word + "'");
      }
    }
    if (n < 0) {
      n = static_cast<int>(word.size());
    } else if (static_cast<int>(word.size()) != n) {
      throw usage_error("line " + std::to_string(line_no) + ": word length " +
                        std::to_string(word.size()) + " differs from earlier length " +
                        std::to_string(n));
    }
    terms.push_back({coeff, word});
  }
  if (n < 0) throw usage_error("no Pauli terms found");
  return make_pauli_sum(n, std::move(terms));
}

std::string format_pauli_sum(const PauliSum& h) {
  std::string out;
  char buf[64];
  for (const auto& term : h.terms) {
    std::snprintf(buf, sizeof(buf), "%.17g", term.coefficient);
    out += buf;
    out += ' ';
    out += term.word;
    out += '\n';
  }
  return out;
}

GroundSolution exact_ground_energy(const PauliSum& h) {
  const Eigen::MatrixXcd m = dense_matrix(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  GroundSolution out;
  out.energy = es.eigenvalues()[0];
  out.state = es.eigenvectors().col(0);
  return out;
}

Topology builtin_topology(const std::string& name, int n_qubits) {
  if (name == "all_to_all") return Topology::all_to_all(n_qubits);
  if (name == "heavy_hex4" || name == "grid2x2") {
    if (n_qubits != 4) {
      throw usage_error("topology '" + name + "' is 4-qubit, problem has " +
                        std::to_string(n_qubits));
    }
    if (name == "heavy_hex4") return Topology(4, {{0, 1}, {1, 2}, {2, 3}});
    return Topology(4, {{0, 1}, {1, 3}, {3, 2}, {2, 0}});
  }
  throw usage_error("unknown topology '" + name + "'");
}

}  // namespace qcnash
