#include "kerrbell/pointer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

#include "kerrbell/errors.hpp"

namespace kerrbell {

namespace {

const double kOverlapNorm = std::pow(2.0 * std::numbers::pi, -0.25);
const double kGaussNorm = 1.0 / std::sqrt(2.0 * std::numbers::pi);
constexpr double kMinConditioningDensity = 1e-300;

double unit_gaussian(double x, double mean) {
  const double u = x - mean;
  return kGaussNorm * std::exp(-0.5 * u * u);
}

}  // namespace

PointerDecomposition::PointerDecomposition(std::size_t modes, std::vector<PointerBranch> branches,
                                           int max_photons)
    : modes_(modes), max_photons_(max_photons) {
  std::map<Occupation, std::size_t> seen;
  for (auto& b : branches) {
    if (b.occupation.size() != modes_) {
      throw std::invalid_argument("PointerDecomposition: occupation has wrong arity");
    }
    if (total_photons(b.occupation) > max_photons_) {
      throw TruncationOverflow("PointerDecomposition: occupation exceeds photon bound");
    }
    auto [it, inserted] = seen.emplace(b.occupation, branches_.size());
    if (inserted) {
      branches_.push_back(std::move(b));
      continue;
    }
    PointerBranch& existing = branches_[it->second];
    if (existing.beta != b.beta) {
      throw std::invalid_argument(
          "PointerDecomposition: repeated occupation with a different probe amplitude");
    }
    existing.amplitude += b.amplitude;
  }
  std::erase_if(branches_,
                [](const PointerBranch& b) { return std::abs(b.amplitude) < kPruneThreshold; });
  double norm2 = 0.0;
  for (const auto& b : branches_) norm2 += std::norm(b.amplitude);
  if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
    throw std::invalid_argument("PointerDecomposition: amplitudes must have finite nonzero norm");
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& b : branches_) b.amplitude *= scale;
}

PointerDecomposition attach_probe(const FockState& s, double alpha) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("attach_probe: alpha must be finite and non-negative");
  }
  std::vector<PointerBranch> branches;
  branches.reserve(s.amplitudes().size());
  for (const auto& [occ, amp] : s.amplitudes()) {
    branches.push_back({occ, amp, Complex(alpha, 0.0)});
  }
  return PointerDecomposition(s.modes(), std::move(branches), s.max_photons());
}

PointerDecomposition apply_cross_kerr(const PointerDecomposition& pd, std::span<const int> weights,
                                      double theta) {
  if (weights.size() != pd.modes()) {
    throw std::invalid_argument("apply_cross_kerr: need one weight per signal mode");
  }
  if (!std::isfinite(theta)) throw std::invalid_argument("apply_cross_kerr: theta must be finite");
  std::vector<PointerBranch> out = pd.branches();
  for (auto& b : out) {
    int shift = 0;
    for (std::size_t m = 0; m < weights.size(); ++m) shift += weights[m] * b.occupation[m];
    if (shift != 0) b.beta *= std::polar(1.0, theta * shift);
  }
  return PointerDecomposition(pd.modes(), std::move(out), pd.max_photons());
}

Complex x_overlap(Complex beta, double x) {
  // Expanding the exponent: -(x - 2a)^2 / 4 + i b (x - a), beta = a + ib.
  const double a = beta.real();
  const double b = beta.imag();
  const double u = x - 2.0 * a;
  return kOverlapNorm * std::exp(-0.25 * u * u) * std::polar(1.0, b * (x - a));
}

double homodyne_density(const PointerDecomposition& pd, double x) {
  // Occupations are distinct, so the branches add incoherently.
  double p = 0.0;
  for (const auto& b : pd.branches()) p += std::norm(b.amplitude) * unit_gaussian(x, 2.0 * b.beta.real());
  return p;
}

double sample_homodyne(const PointerDecomposition& pd, Rng& rng, const SamplingGrid& grid) {
  if (!(grid.step > 0.0) || !(grid.half_width > 0.0)) {
    throw std::invalid_argument("sample_homodyne: grid step and half width must be positive");
  }
  std::map<double, double> weight_by_centre;
  for (const auto& b : pd.branches()) weight_by_centre[2.0 * b.beta.real()] += std::norm(b.amplitude);

  const double lo = weight_by_centre.begin()->first - grid.half_width;
  const double hi = weight_by_centre.rbegin()->first + grid.half_width;
  const auto cells = static_cast<std::size_t>(std::ceil((hi - lo) / grid.step));
  const double h = (hi - lo) / static_cast<double>(cells);

  auto density = [&](double x) {
    double p = 0.0;
    for (const auto& [centre, w] : weight_by_centre) p += w * unit_gaussian(x, centre);
    return p;
  };

  std::vector<double> cdf(cells + 1, 0.0);
  double left = density(lo);
  for (std::size_t i = 0; i < cells; ++i) {
    const double right = density(lo + h * static_cast<double>(i + 1));
    cdf[i + 1] = cdf[i] + 0.5 * h * (left + right);
    left = right;
  }

  const double target = uniform01(rng) * cdf.back();
  auto it = std::upper_bound(cdf.begin(), cdf.end(), target);
  std::size_t cell = it == cdf.begin() ? 0 : static_cast<std::size_t>(it - cdf.begin()) - 1;
  cell = std::min(cell, cells - 1);
  const double mass = cdf[cell + 1] - cdf[cell];
  const double frac = mass > 0.0 ? (target - cdf[cell]) / mass : 0.5;
  return lo + h * (static_cast<double>(cell) + frac);
}

FockState collapse(const PointerDecomposition& pd, double x) {
  if (homodyne_density(pd, x) < kMinConditioningDensity) {
    throw ZeroDensity("collapse: homodyne density at x is numerically zero");
  }
  // Work with log-magnitudes so far-tail outcomes do not underflow before
  // normalization.
  std::vector<double> log_mag;
  log_mag.reserve(pd.branches().size());
  double peak = -std::numeric_limits<double>::infinity();
  for (const auto& b : pd.branches()) {
    const double u = x - 2.0 * b.beta.real();
    const double lm = std::log(std::abs(b.amplitude)) - 0.25 * u * u;
    log_mag.push_back(lm);
    peak = std::max(peak, lm);
  }
  std::vector<std::pair<Occupation, Complex>> terms;
  terms.reserve(pd.branches().size());
  for (std::size_t j = 0; j < pd.branches().size(); ++j) {
    const auto& b = pd.branches()[j];
    const double phase =
        std::arg(b.amplitude) + b.beta.imag() * (x - b.beta.real());
    terms.emplace_back(b.occupation, std::polar(std::exp(log_mag[j] - peak), phase));
  }
  return FockState(pd.modes(), terms, pd.max_photons());
}

}  // namespace kerrbell
