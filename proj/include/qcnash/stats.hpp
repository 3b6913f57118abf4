#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace qcnash {

struct SummaryStats {
  double mean = 0.0;
  double sd = 0.0;  // sample, divisor N-1; 0 for N=1
  double median = 0.0;
  double min = 0.0;
  double max = 0.0;
};

/// Throws usage_error on empty input. Median uses the midpoint rule for even
/// lengths.
SummaryStats summarize(const std::vector<double>& xs);

/// Percentile bootstrap interval of the resampled mean; deterministic given
/// rng_seed.
std::pair<double, double> bootstrap_ci(const std::vector<double>& xs, double level = 0.95,
                                       int resamples = 10000, std::uint64_t rng_seed = 0);

/// Exact paired one-sided Wilcoxon signed-rank test of a > b: differences
/// a-b, zeros dropped, average ranks on tied magnitudes, p = P(W+* >= W+)
/// over all 2^m sign assignments. Throws usage_error when every difference is
/// zero or more than 20 pairs remain.
double wilcoxon_paired_onesided(const std::vector<double>& a, const std::vector<double>& b);

/// Paired effect size mean(a-b)/sd(a-b), sample sd. Throws usage_error on
/// fewer than 2 pairs or constant differences.
double cohens_dz(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace qcnash
