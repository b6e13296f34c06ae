#pragma once

#include <cmath>
#include <cstddef>
#include <utility>

namespace kerrbell {

/// Binomial proportion with its standard error and Wilson score interval.
struct Proportion {
  std::size_t successes = 0;
  std::size_t trials = 0;

  double rate() const { return trials ? double(successes) / double(trials) : 0.0; }

  /// Binomial standard deviation of the rate for a true probability p.
  static double sigma(double p, std::size_t n) { return std::sqrt(p * (1.0 - p) / double(n)); }

  std::pair<double, double> wilson(double z = 1.96) const {
    if (trials == 0) return {0.0, 1.0};
    const double n = double(trials);
    const double p = rate();
    const double denom = 1.0 + z * z / n;
    const double centre = (p + z * z / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z * z / (4.0 * n * n)) / denom;
    return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
  }
};

}  // namespace kerrbell
