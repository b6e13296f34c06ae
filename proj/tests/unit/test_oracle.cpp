#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "kerrbell/analyzers.hpp"
#include "kerrbell/errors.hpp"
#include "kerrbell/oracle.hpp"
#include "kerrbell/pointer.hpp"
#include "unit/test_util.hpp"

using namespace kerrbell;
using namespace kerrbell::oracle;

namespace {

const double kH = 1.0 / std::numbers::sqrt2;

// Coherent-state wavefunction summed from its Fock series.
Complex fock_series_overlap(Complex beta, double x, int n_max) {
  const auto psi = quadrature_wavefunctions(n_max, x);
  Complex c = std::exp(-0.5 * std::norm(beta));
  Complex sum = c * psi[0];
  for (int n = 1; n <= n_max; ++n) {
    c *= beta / std::sqrt(double(n));
    sum += c * psi[n];
  }
  return sum;
}

double max_deviation(const FockState& a, const FockState& b) {
  double dev = 0.0;
  for (const auto& [occ, amp] : a.amplitudes()) dev = std::max(dev, std::abs(amp - b.amplitude(occ)));
  for (const auto& [occ, amp] : b.amplitudes()) dev = std::max(dev, std::abs(amp - a.amplitude(occ)));
  return dev;
}

}  // namespace

TEST(OracleConfig, Defaults) {
  const auto cfg = OracleConfig::with_defaults(3.0, 0.2);
  EXPECT_EQ(cfg.n_max, 59);
  EXPECT_EQ(cfg.x_min, -18.0);
  EXPECT_EQ(cfg.x_max, 18.0);
  EXPECT_EQ(cfg.x_step, 0.01);
  EXPECT_LT(poisson_tail_mass(kMaxAlpha, OracleConfig::with_defaults(kMaxAlpha, 0.1).n_max), 1e-12);
}

TEST(OracleConfig, Validation) {
  EXPECT_THROW(OracleConfig::with_defaults(4.5, 0.1).validate(), std::invalid_argument);
  EXPECT_THROW(OracleConfig::with_defaults(-0.1, 0.1).validate(), std::invalid_argument);
  auto cfg = OracleConfig::with_defaults(1.0, 0.1);
  cfg.x_step = 0.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(QuadratureWavefunctions, GroundStateAndOrthonormality) {
  for (double x : {-3.0, 0.0, 1.7}) {
    EXPECT_NEAR(quadrature_wavefunctions(0, x)[0], std::abs(x_overlap(0.0, x)), 1e-15);
  }
  for (int m : {0, 3, 10}) {
    for (int n : {0, 3, 10}) {
      const double overlap = fixtures::simpson(
          [&](double x) {
            const auto psi = quadrature_wavefunctions(10, x);
            return psi[m] * psi[n];
          },
          -20.0, 20.0, 4000);
      EXPECT_NEAR(overlap, m == n ? 1.0 : 0.0, 1e-10);
    }
  }
}

TEST(QuadratureWavefunctions, FockSeriesMatchesClosedForm) {
  for (Complex beta : {Complex(1.5, 0.0), std::polar(2.0, 0.9), Complex(-0.7, 2.3)}) {
    for (double x : {-4.0, 0.0, 2.5, 5.0}) {
      const Complex a = fock_series_overlap(beta, x, 80);
      const Complex b = x_overlap(beta, x);
      EXPECT_NEAR(std::abs(a - b), 0.0, 1e-12) << "beta=" << beta << " x=" << x;
    }
  }
}

TEST(PoissonTail, Examples) {
  EXPECT_EQ(poisson_tail_mass(0.0, 0), 0.0);
  EXPECT_NEAR(poisson_tail_mass(1.0, 0), 1.0 - std::exp(-1.0), 1e-14);
  EXPECT_NEAR(poisson_tail_mass(1.0, 1), 1.0 - 2.0 * std::exp(-1.0), 1e-14);
}

TEST(FullFock, NoCouplingGivesSingleGaussian) {
  const FockState s(2, {{{1, 1}, kH}, {{2, 0}, 0.5}, {{0, 2}, 0.5}});
  const auto cfg = OracleConfig::with_defaults(2.0, 0.0);
  for (double x : {-2.0, 2.0, 4.0, 7.5}) {
    const double expected = std::exp(-0.5 * (x - 4.0) * (x - 4.0)) / std::sqrt(2 * std::numbers::pi);
    EXPECT_NEAR(full_fock_density_at(s, cfg, kDemoWeights, x), expected, 1e-12);
  }
}

TEST(FullFock, BalancedPairIsUnshifted) {
  const FockState s(2, {{{1, 1}, 1.0}});
  const auto cfg = OracleConfig::with_defaults(3.0, 0.4);
  for (double x : {2.0, 6.0, 9.0}) {
    const double expected = std::exp(-0.5 * (x - 6.0) * (x - 6.0)) / std::sqrt(2 * std::numbers::pi);
    EXPECT_NEAR(full_fock_density_at(s, cfg, kDemoWeights, x), expected, 1e-12);
  }
}

TEST(FullFock, AgreesWithPointerEngine) {
  const double alpha = 2.0, theta = 0.3;
  const auto cfg = OracleConfig::with_defaults(alpha, theta);
  const FockState s = apply_beam_splitter(embed(TwoQubitState({0.5, Complex(0.1, 0.4), -0.6, 0.3})));
  const auto pd = apply_cross_kerr(attach_probe(s, alpha), kAnalyzerWeights, theta);
  const auto table = full_fock_density(s, cfg, kAnalyzerWeights);
  double worst = 0.0;
  for (std::size_t i = 0; i < table.x.size(); ++i) {
    worst = std::max(worst, std::abs(table.p[i] - homodyne_density(pd, table.x[i])));
  }
  EXPECT_LT(worst, 1e-8);
  EXPECT_NEAR(table.integral(), 1.0, 1e-9);
  for (double x : {-1.0, 1.6, 3.1, 4.0}) {
    EXPECT_LT(max_deviation(collapse(pd, x), full_fock_collapse(s, cfg, kAnalyzerWeights, x)), 1e-8);
  }
}

TEST(FullFock, StableUnderLargerTruncation) {
  const double alpha = 3.0, theta = 0.5;
  auto cfg = OracleConfig::with_defaults(alpha, theta);
  const FockState s(2, {{{1, 1}, kH}, {{2, 0}, 0.5}, {{0, 2}, -0.5}});
  auto doubled = cfg;
  doubled.n_max *= 2;
  for (double x : {-3.0, 0.0, 3.3, 6.0, 9.0}) {
    EXPECT_NEAR(full_fock_density_at(s, cfg, kDemoWeights, x), full_fock_density_at(s, doubled, kDemoWeights, x),
                1e-10);
    EXPECT_LT(max_deviation(full_fock_collapse(s, cfg, kDemoWeights, x),
                            full_fock_collapse(s, doubled, kDemoWeights, x)),
              1e-10);
  }
}

TEST(FullFock, VacuumProbe) {
  const FockState s(2, {{{1, 1}, kH}, {{2, 0}, kH}});
  const auto cfg = OracleConfig::with_defaults(0.0, 0.3);
  const auto post = full_fock_collapse(s, cfg, kDemoWeights, 0.4);
  EXPECT_NEAR(fidelity(post, s), 1.0, 1e-14);
}

TEST(FullFock, Rejections) {
  const FockState s(2, {{{1, 1}, 1.0}});
  auto cfg = OracleConfig::with_defaults(2.0, 0.1);
  cfg.n_max = 5;
  EXPECT_THROW(full_fock_density_at(s, cfg, kDemoWeights, 0.0), TruncationOverflow);
  cfg = OracleConfig::with_defaults(2.0, 0.1);
  EXPECT_THROW(full_fock_collapse(s, cfg, kDemoWeights, 80.0), ZeroDensity);
  EXPECT_THROW(full_fock_density_at(s, cfg, kAnalyzerWeights, 0.0), std::invalid_argument);
}

TEST(FullFock, AnalyzerRestoresTripletsAtSmallAlpha) {
  // Collapse from the oracle, then the same correction and recombination the
  // analyzer uses: triplet inputs come back unchanged.
  const double alpha = 3.0, theta = 0.5;
  const auto cfg = OracleConfig::with_defaults(alpha, theta);
  std::mt19937_64 gen(13);
  for (int trial = 0; trial < 5; ++trial) {
    const TwoQubitState q = fixtures::random_triplet(gen);
    const FockState mixed = apply_beam_splitter(embed(q));
    for (double x : {0.5, 2.2, 4.0, 6.1}) {
      const FockState post = full_fock_collapse(mixed, cfg, kAnalyzerWeights, x);
      const FockState corrected =
          apply_phase_shifter(post, kAnalyzerCorrectedModes, -correction_phase(x, theta, alpha));
      const TwoQubitState out = extract(apply_beam_splitter(corrected));
      EXPECT_GE(fidelity(out, q), 1.0 - 1e-10) << "x=" << x;
    }
  }
}
