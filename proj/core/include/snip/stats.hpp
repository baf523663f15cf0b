#pragma once

#include <cstdint>
#include <vector>

namespace snip {

// Descriptive summary of an indicator distribution. Null indicator values
// never enter; callers filter them before calling.
struct DistributionSummary {
  std::size_t n = 0;
  double mean = 0.0;
  double stddev = 0.0;    // sample standard deviation (divisor n-1), 0 for n < 2
  double skewness = 0.0;  // m3 / m2^(3/2) with population central moments
  double p25 = 0.0;
  double p50 = 0.0;
  double p75 = 0.0;
  double p90 = 0.0;
  double p99 = 0.0;
};

// Percentiles use linear interpolation at rank 1 + (p/100)(n-1) over the
// sorted values. Throws std::invalid_argument on empty or non-finite input.
DistributionSummary distribution_summary(std::vector<double> values);

// Plain sorted-middle median with the same even-count rule as the summary.
double median(std::vector<double> values);

struct HistogramBin {
  double midpoint;  // k + 0.5 for bin [k, k+1)
  std::uint64_t count;
  double pct;
};

// Unit-width histogram over [k, k+1) bins, boundary values going to the
// higher bin. Bins are contiguous from 0 up to the largest occupied bin.
// Throws std::invalid_argument on empty, negative or non-finite input.
struct Histogram {
  std::vector<HistogramBin> bins;
};

Histogram unit_histogram(const std::vector<double>& values);

}  // namespace snip
