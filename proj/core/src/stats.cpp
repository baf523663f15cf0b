#include "snip/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace snip {

namespace {

void require_finite(const std::vector<double>& values) {
  for (double v : values) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite value");
  }
}

// Rank 1 + (p/100)(n-1), 1-based, linear interpolation between neighbours.
double percentile(const std::vector<double>& sorted, double p) {
  const std::size_t n = sorted.size();
  const double rank = 1.0 + (p / 100.0) * static_cast<double>(n - 1);
  const std::size_t lo = static_cast<std::size_t>(rank);
  const double frac = rank - static_cast<double>(lo);
  if (lo >= n) return sorted[n - 1];
  if (frac == 0.0) return sorted[lo - 1];
  return sorted[lo - 1] + frac * (sorted[lo] - sorted[lo - 1]);
}

}  // namespace

DistributionSummary distribution_summary(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("empty distribution");
  require_finite(values);

  DistributionSummary s;
  s.n = values.size();
  const double n = static_cast<double>(s.n);

  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / n;

  double sq = 0.0;
  double cube = 0.0;
  for (double v : values) {
    const double d = v - s.mean;
    sq += d * d;
    cube += d * d * d;
  }
  s.stddev = s.n > 1 ? std::sqrt(sq / (n - 1.0)) : 0.0;
  const double m2 = sq / n;
  const double m3 = cube / n;
  s.skewness = m2 > 0.0 ? m3 / std::pow(m2, 1.5) : 0.0;

  std::sort(values.begin(), values.end());
  s.p25 = percentile(values, 25.0);
  s.p50 = percentile(values, 50.0);
  s.p75 = percentile(values, 75.0);
  s.p90 = percentile(values, 90.0);
  s.p99 = percentile(values, 99.0);
  return s;
}

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of an empty list");
  require_finite(values);
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

Histogram unit_histogram(const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("empty histogram input");
  require_finite(values);
  std::vector<std::uint64_t> counts;
  for (double v : values) {
    if (v < 0.0) throw std::invalid_argument("negative value in histogram input");
    const std::size_t bin = static_cast<std::size_t>(std::floor(v));
    if (bin >= counts.size()) counts.resize(bin + 1, 0);
    ++counts[bin];
  }
  Histogram h;
  const double n = static_cast<double>(values.size());
  for (std::size_t k = 0; k < counts.size(); ++k) {
    h.bins.push_back({static_cast<double>(k) + 0.5, counts[k],
                      100.0 * static_cast<double>(counts[k]) / n});
  }
  return h;
}

}  // namespace snip
