#pragma once

// Brute-force reference: the probe is expanded in a truncated Fock basis,
// the cross-Kerr coupling is applied as a diagonal phase on the joint
// signal (x) probe amplitudes, and the quadrature projection uses Hermite
// functions. Slow by construction; only meant to certify the pointer model.

#include <span>
#include <vector>

#include "kerrbell/fock.hpp"

namespace kerrbell::oracle {

inline constexpr double kMaxAlpha = 4.0;
inline constexpr double kMaxTailMass = 1e-12;

struct OracleConfig {
  double alpha = 1.0;
  double theta = 0.1;
  int n_max = 0;
  double x_min = 0.0;
  double x_max = 0.0;
  double x_step = 0.01;

  /// n_max = ceil(alpha^2 + 10 alpha + 20); grid [-2 alpha - 12, 2 alpha + 12].
  static OracleConfig with_defaults(double alpha, double theta);

  /// Throws std::invalid_argument for alpha outside [0, 4] or a bad grid.
  void validate() const;
};

struct DensityTable {
  std::vector<double> x;
  std::vector<double> p;

  /// Trapezoidal integral over the grid.
  double integral() const;
};

/// Poisson weight of |alpha> beyond n_max.
double poisson_tail_mass(double alpha, int n_max);

/// <x|n> for n = 0..n_max, for the quadrature X = c + c^dag. <x|0> is
/// (2 pi)^{-1/4} exp(-x^2/4).
std::vector<double> quadrature_wavefunctions(int n_max, double x);

/// Homodyne density of the probe after the coupling exp(i theta sum_m
/// weights[m] n_m n_probe) acting on s (x) |alpha>. Throws TruncationOverflow
/// when the probe tail beyond n_max exceeds 1e-12.
double full_fock_density_at(const FockState& s, const OracleConfig& cfg,
                            std::span<const int> weights, double x);
DensityTable full_fock_density(const FockState& s, const OracleConfig& cfg,
                               std::span<const int> weights);

/// Conditional signal state for outcome x. Throws ZeroDensity when the
/// density is below 1e-300.
FockState full_fock_collapse(const FockState& s, const OracleConfig& cfg,
                             std::span<const int> weights, double x);

}  // namespace kerrbell::oracle
