#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace qcnash {

using Complex = std::complex<double>;

/// Largest qubit count the dense backend accepts.
inline constexpr int kMaxDenseQubits = 10;

struct PauliTerm {
  double coefficient = 0.0;
  std::string word;  // character i acts on qubit i; letters I X Y Z
};

/// Real-weighted Pauli-string sum. Canonical form: terms sorted by word
/// index, duplicates merged, exact zeros dropped.
struct PauliSum {
  int n_qubits = 0;
  std::vector<PauliTerm> terms;
};

/// Normalizes (sorts, merges duplicates, drops zero coefficients). Throws
/// std::invalid_argument on bad letters or wrong word length.
PauliSum make_pauli_sum(int n_qubits, std::vector<PauliTerm> terms);

/// Base-4 index of a word: qubit i contributes digit {I:0, X:1, Y:2, Z:3}
/// at position i.
std::uint64_t word_index(const std::string& word);
std::string word_from_index(std::uint64_t index, int n_qubits);

/// P|psi> for a single Pauli word.
Eigen::VectorXcd apply_pauli_word(const std::string& word, const Eigen::VectorXcd& state);

/// Dense 2^n x 2^n Hermitian matrix; throws capability_error past
/// kMaxDenseQubits.
Eigen::MatrixXcd dense_matrix(const PauliSum& h);

}  // namespace qcnash
