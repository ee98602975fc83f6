#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace unigate {

struct Histogram {
  double lo = 0.0;
  double hi = 1.0;
  std::size_t bins = 1;
  std::vector<std::size_t> counts;
  std::size_t recorded = 0;  // samples inside [lo, hi]

  Histogram(double lo, double hi, std::size_t bins);

  /// Values outside [lo, hi] are ignored; hi itself falls in the last bin.
  void add(double x);
  /// counts / (recorded * width); integrates to 1 when anything was recorded.
  std::vector<double> density() const;
  double bin_lo(std::size_t k) const;
  double bin_hi(std::size_t k) const;
  /// `bin_lo,bin_hi,count,density` with a header line.
  std::string to_csv() const;
};

struct EstimateWithCI {
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(samples)
  std::size_t samples = 0;
};

/// Pairwise (cascade) summation; the result depends only on the order of xs.
double pairwise_sum(const std::vector<double>& xs);

EstimateWithCI estimate(const std::vector<double>& xs);

/// Upper tail P(X >= chi2) of a chi-square law with `dof` degrees of freedom.
double chi2_pvalue(double chi2, double dof);

struct ChiSquareResult {
  double statistic = 0.0;
  std::size_t dof = 0;
  std::size_t cells = 0;  // cells after pooling
  double p_value = 0.0;
};

/// Pearson test of observed counts against expected counts. Cells whose
/// expectation is below `min_expected` are pooled into one cell (dropped if
/// that pool is still below it); dof = cells - 1.
ChiSquareResult chi_square(const std::vector<double>& observed, const std::vector<double>& expected,
                           double min_expected = 5.0);

/// Two-sample chi-square homogeneity test on equal-size histograms of the
/// same binning; bins with a combined count below `min_count` are pooled.
ChiSquareResult chi_square_two_sample(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
                                      double min_count = 10.0);

/// Calls body(i) for i in [0, count) on `threads` workers, each taking a
/// contiguous block. Results must be written to per-index slots; with that
/// discipline the outcome does not depend on the worker count. The first
/// exception thrown by a worker is rethrown.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& body);

}  // namespace unigate
