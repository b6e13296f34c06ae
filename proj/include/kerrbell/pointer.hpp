#pragma once

// Signal (x) probe states written exactly as a finite sum of signal Fock
// branches, each carrying its own coherent probe amplitude. Cross-Kerr
// evolution only rotates the per-branch amplitudes, so the representation
// stays exact for any probe strength.

#include <span>
#include <vector>

#include "kerrbell/fock.hpp"
#include "kerrbell/random.hpp"

namespace kerrbell {

struct PointerBranch {
  Occupation occupation;
  Complex amplitude;  // signal amplitude d_j
  Complex beta;       // coherent probe amplitude
};

class PointerDecomposition {
 public:
  /// Merges branches with equal occupation (their beta must agree exactly)
  /// and normalizes the signal amplitudes.
  PointerDecomposition(std::size_t modes, std::vector<PointerBranch> branches,
                       int max_photons = kDefaultMaxPhotons);

  std::size_t modes() const { return modes_; }
  int max_photons() const { return max_photons_; }
  const std::vector<PointerBranch>& branches() const { return branches_; }

 private:
  std::size_t modes_;
  int max_photons_;
  std::vector<PointerBranch> branches_;
};

/// |s> (x) |alpha>: one branch per occupation, every beta equal to alpha.
PointerDecomposition attach_probe(const FockState& s, double alpha);

/// beta_j -> beta_j * exp(i theta sum_m weights[m] n_m). One weight per mode.
PointerDecomposition apply_cross_kerr(const PointerDecomposition& pd, std::span<const int> weights,
                                      double theta);

/// <x|beta> for the quadrature X = c + c^dag:
///   (2 pi)^{-1/4} exp[-Im(beta)^2 - (x - 2 beta)^2 / 4 + i Re(beta) Im(beta)].
/// The last phase ties the result to the Fock-series phase of |beta>, which
/// is what keeps relative phases between branches physical.
Complex x_overlap(Complex beta, double x);

/// Probability density of the homodyne outcome x. Integrates to one.
double homodyne_density(const PointerDecomposition& pd, double x);

struct SamplingGrid {
  double half_width = 8.0;  // beyond the outermost peak, in standard deviations
  double step = 0.01;
};

/// Draws x from homodyne_density by inverse CDF on a grid spanning
/// [min 2Re(beta) - half_width, max 2Re(beta) + half_width].
double sample_homodyne(const PointerDecomposition& pd, Rng& rng, const SamplingGrid& grid = {});

/// Conditional signal state after observing x: amplitude d_j <x|beta_j> on
/// occupation j, renormalized. Throws ZeroDensity when p(x) < 1e-300.
FockState collapse(const PointerDecomposition& pd, double x);

}  // namespace kerrbell
