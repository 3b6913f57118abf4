#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace qcnash {

// Thin helpers over mt19937_64. std::uniform_*_distribution is
// implementation-defined, so sampling goes through these to keep traces
// identical across standard libraries.

inline double uniform_real01(std::mt19937_64& rng) {
  return (rng() >> 11) * 0x1.0p-53;  // 53 random bits in [0,1)
}

inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  // rejection sampling on the top range to avoid modulo bias
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return static_cast<std::size_t>(v % n);
}

/// First k slots of a partial Fisher-Yates shuffle: k distinct indices
/// drawn uniformly from [0, n).
inline std::vector<std::size_t> sample_indices(std::mt19937_64& rng, std::size_t n,
                                               std::size_t k) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  if (k > n) k = n;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + uniform_index(rng, n - i);
    std::swap(idx[i], idx[j]);
  }
  idx.resize(k);
  return idx;
}

}  // namespace qcnash
