#include "qcnash/stats.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qcnash/common.hpp"
#include "qcnash/rng.hpp"

namespace qcnash {

namespace {

// Differences within this of zero are treated as ties; benchmark potentials
// from identical traces should cancel even with rounding noise.
constexpr double kTieEps = 1e-12;

std::vector<double> paired_differences(const std::vector<double>& a,
                                       const std::vector<double>& b) {
  if (a.size() != b.size() || a.empty()) {
    throw usage_error("paired samples need equal nonzero lengths");
  }
  std::vector<double> d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

}  // namespace

SummaryStats summarize(const std::vector<double>& xs) {
  if (xs.empty()) throw usage_error("summarize needs a non-empty sample");
  SummaryStats s;
  double sum = 0.0;
  for (double x : xs) sum += x;
  s.mean = sum / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  std::vector<double> sorted = xs;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  s.median = (n % 2) ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
  s.min = sorted.front();
  s.max = sorted.back();
  return s;
}

std::pair<double, double> bootstrap_ci(const std::vector<double>& xs, double level,
                                       int resamples, std::uint64_t rng_seed) {
  if (xs.empty()) throw usage_error("bootstrap_ci needs a non-empty sample");
  if (level <= 0.0 || level >= 1.0) throw usage_error("bootstrap level must be in (0,1)");
  if (resamples < 1) throw usage_error("bootstrap needs at least one resample");
  std::mt19937_64 rng(rng_seed);
  const std::size_t n = xs.size();
  std::vector<double> means(static_cast<std::size_t>(resamples));
  for (auto& m : means) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += xs[uniform_index(rng, n)];
    m = sum / static_cast<double>(n);
  }
  std::sort(means.begin(), means.end());
  const double alpha = 1.0 - level;
  const double last = static_cast<double>(means.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(alpha / 2 * last));
  const auto hi = static_cast<std::size_t>(std::ceil((1.0 - alpha / 2) * last));
  return {means[lo], means[hi]};
}

double wilcoxon_paired_onesided(const std::vector<double>& a, const std::vector<double>& b) {
  const std::vector<double> d = paired_differences(a, b);
  std::vector<double> kept;
  for (double v : d) {
    if (std::abs(v) > kTieEps) kept.push_back(v);
  }
  const std::size_t m = kept.size();
  if (m == 0) throw usage_error("wilcoxon: all differences are zero");
  if (m > 20) throw usage_error("wilcoxon: exact enumeration limited to 20 pairs, got " +
                                std::to_string(m));

  // average ranks of |d|, ties grouped within kTieEps
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return std::abs(kept[i]) < std::abs(kept[j]); });
  std::vector<double> rank(m);
  std::size_t i = 0;
  while (i < m) {
    std::size_t j = i;
    while (j + 1 < m && std::abs(kept[order[j + 1]]) - std::abs(kept[order[j]]) <= kTieEps) ++j;
    const double avg = 0.5 * static_cast<double>(i + j) + 1.0;  // ranks are 1-based
    for (std::size_t k = i; k <= j; ++k) rank[order[k]] = avg;
    i = j + 1;
  }

  double w_plus = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    if (kept[k] > 0) w_plus += rank[k];
  }

  std::uint64_t at_least = 0;
  const std::uint64_t patterns = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < patterns; ++mask) {
    double w = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      if (mask & (std::uint64_t{1} << k)) w += rank[k];
    }
    if (w >= w_plus - 1e-9) ++at_least;
  }
  return static_cast<double>(at_least) / static_cast<double>(patterns);
}

double cohens_dz(const std::vector<double>& a, const std::vector<double>& b) {
  const std::vector<double> d = paired_differences(a, b);
  if (d.size() < 2) throw usage_error("cohens_dz needs at least 2 pairs");
  const auto [lo, hi] = std::minmax_element(d.begin(), d.end());
  if (*hi - *lo == 0.0) throw usage_error("cohens_dz: constant differences");
  const SummaryStats s = summarize(d);
  if (s.sd == 0.0) throw usage_error("cohens_dz: zero variance");
  return s.mean / s.sd;
}

}  // namespace qcnash
