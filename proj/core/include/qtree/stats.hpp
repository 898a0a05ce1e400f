#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace qtree {

// Moment accumulator. Folding the same values in the same order always
// reproduces the same bits, which the report merge relies on.
struct RunningStat {
  std::uint64_t count = 0;
  double sum = 0;
  double sum_sq = 0;
  double min = 0;
  double max = 0;

  void add(double x);
  double mean() const;
  double variance() const;  // sample variance (n-1)
  double stddev() const;
  double stderr_mean() const;
};

// Empirical quantile of a sorted sample (nearest-rank).
double quantile_sorted(std::span<const double> sorted, double q);

// Pearson correlation of paired samples.
double pearson_correlation(std::span<const double> x, std::span<const double> y);

struct LinearFit {
  double slope = 0;
  double intercept = 0;
};

// Least squares y = slope * x + intercept.
LinearFit least_squares(std::span<const double> x, std::span<const double> y);

// Two-sample Kolmogorov-Smirnov distance (sup norm of empirical CDF gap).
double ks_distance(std::vector<double> a, std::vector<double> b);

// Rejection threshold for the two-sample KS distance at the given
// significance: c(alpha) * sqrt((n+m)/(n*m)), c(alpha) = sqrt(ln(2/alpha)/2).
double ks_threshold(std::size_t n, std::size_t m, double significance);

// Upper critical value of the chi-square distribution via the
// Wilson-Hilferty cube approximation; accurate to a few percent for df >= 3.
double chi_square_critical(std::uint32_t df, double significance);

// Pearson chi-square statistic of observed counts against the uniform
// distribution over the cells.
double chi_square_uniform(std::span<const std::uint64_t> counts);

// Inverse standard normal CDF (Acklam's rational approximation).
double normal_quantile(double p);

}  // namespace qtree
