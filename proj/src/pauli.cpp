#include "qcnash/pauli.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "qcnash/common.hpp"

namespace qcnash {

namespace {

int letter_digit(char c) {
  switch (c) {
    case 'I': return 0;
    case 'X': return 1;
    case 'Y': return 2;
    case 'Z': return 3;
    default: return -1;
  }
}

constexpr char kLetters[4] = {'I', 'X', 'Y', 'Z'};

}  // namespace

PauliSum make_pauli_sum(int n_qubits, std::vector<PauliTerm> terms) {
  std::map<std::uint64_t, double> merged;
  for (const auto& term : terms) {
    if (static_cast<int>(term.word.size()) != n_qubits) {
      throw std::invalid_argument("Pauli word '" + term.word + "' has length " +
                                  std::to_string(term.word.size()) + ", expected " +
                                  std::to_string(n_qubits));
    }
    merged[word_index(term.word)] += term.coefficient;
  }
  PauliSum out;
  out.n_qubits = n_qubits;
  for (const auto& [idx, coeff] : merged) {
    if (coeff == 0.0) continue;
    out.terms.push_back({coeff, word_from_index(idx, n_qubits)});
  }
  return out;
}

std::uint64_t word_index(const std::string& word) {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const int d = letter_digit(word[i]);
    if (d < 0) {
      throw std::invalid_argument("bad Pauli letter '" + std::string(1, word[i]) + "' in '" +
                                  word + "'");
    }
    idx |= static_cast<std::uint64_t>(d) << (2 * i);
  }
  return idx;
}

std::string word_from_index(std::uint64_t index, int n_qubits) {
  std::string word(static_cast<std::size_t>(n_qubits), 'I');
  for (int i = 0; i < n_qubits; ++i) {
    word[static_cast<std::size_t>(i)] = kLetters[(index >> (2 * i)) & 3];
  }
  return word;
}

Eigen::VectorXcd apply_pauli_word(const std::string& word, const Eigen::VectorXcd& state) {
  const int n = static_cast<int>(word.size());
  const std::size_t dim = static_cast<std::size_t>(state.size());
  std::size_t flip_mask = 0;
  std::size_t y_mask = 0;
  std::size_t z_mask = 0;
  for (int q = 0; q < n; ++q) {
    switch (word[static_cast<std::size_t>(q)]) {
      case 'I': break;
      case 'X': flip_mask |= std::size_t{1} << q; break;
      case 'Y':
        flip_mask |= std::size_t{1} << q;
        y_mask |= std::size_t{1} << q;
        break;
      case 'Z': z_mask |= std::size_t{1} << q; break;
      default:
        throw std::invalid_argument("bad Pauli letter in '" + word + "'");
    }
  }
  // per-qubit factors: Y|0> = i|1>, Y|1> = -i|0>, Z|b> = (-1)^b |b>
  static const Complex i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const Complex y_phase = i_pow[std::popcount(y_mask) & 3];
  Eigen::VectorXcd out(state.size());
  for (std::size_t b = 0; b < dim; ++b) {
    Complex c = y_phase;
    if ((std::popcount(b & y_mask) + std::popcount(b & z_mask)) & 1) c = -c;
    out[static_cast<Eigen::Index>(b ^ flip_mask)] = c * state[static_cast<Eigen::Index>(b)];
  }
  return out;
}

Eigen::MatrixXcd dense_matrix(const PauliSum& h) {
  if (h.n_qubits > kMaxDenseQubits) {
    throw capability_error("dense backend supports at most " +
                           std::to_string(kMaxDenseQubits) + " qubits, got " +
                           std::to_string(h.n_qubits));
  }
  const Eigen::Index dim = Eigen::Index{1} << h.n_qubits;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::VectorXcd basis = Eigen::VectorXcd::Zero(dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    basis.setZero();
    basis[col] = Complex{1.0, 0.0};
    for (const auto& term : h.terms) {
      m.col(col) += term.coefficient * apply_pauli_word(term.word, basis);
    }
  }
  return m;
}

}  // namespace qcnash
