#pragma once

// Homodyne decision logic, the two-mode balanced/bunched demonstrator and
// the non-destructive four-mode symmetry analyzer.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "kerrbell/fock.hpp"
#include "kerrbell/pointer.hpp"
#include "kerrbell/random.hpp"

namespace kerrbell {

struct AnalyzerConfig {
  double theta = 0.1;  // per-photon cross-Kerr phase, radians
  double alpha = 150.0;  // real coherent probe amplitude
  std::uint64_t seed = 0;
  SamplingGrid grid{};
  /// Replace the homodyne stage with an exact singlet/triplet projection.
  bool ideal = false;

  /// Throws std::invalid_argument unless theta in (0, pi/4] and alpha >= 0.
  void validate() const;
};

enum class Parity { Balanced, Bunched };
enum class Symmetry { Singlet, Triplet };

std::string_view to_string(Parity p);
std::string_view to_string(Symmetry s);

struct HomodyneResult {
  double x = 0.0;
  double density = 0.0;
  Parity classification = Parity::Balanced;
  double phi = 0.0;         // phase_phi(x), in [0, 2pi)
  double correction = 0.0;  // correction_phase(x), in [0, 2pi)
};

struct SymmetryOutcome {
  Symmetry classification = Symmetry::Singlet;
  std::optional<HomodyneResult> homodyne;  // empty in ideal mode
  TwoQubitState post_state;
};

// Cross-Kerr weights: Fig.-2-style two modes (a: +theta, b: -theta) and the
// four-mode analyzer (arm 1: +theta, arm 2: -theta on both polarizations).
inline constexpr std::array<int, 2> kDemoWeights = {+1, -1};
inline constexpr std::array<int, 4> kAnalyzerWeights = {+1, +1, -1, -1};
inline constexpr std::array<std::size_t, 1> kDemoCorrectedModes = {0};
inline constexpr std::array<std::size_t, 2> kAnalyzerCorrectedModes = {kArm1H, kArm1V};

/// alpha sin2theta (x - 2 alpha cos2theta) mod 2pi.
double phase_phi(double x, double theta, double alpha);

/// Phase actually carried by the +2theta bunched branch after conditioning
/// on x: phase_phi(x) + alpha^2 sin2theta cos2theta, mod 2pi. The conditional
/// shifter exp(-i correction n) on the +theta modes removes it exactly.
double correction_phase(double x, double theta, double alpha);

/// Midpoint between the balanced (2 alpha) and bunched (2 alpha cos2theta) peaks.
double decision_threshold(double theta, double alpha);

/// x >= threshold is Balanced, below is Bunched.
Parity classify(double x, double theta, double alpha);

enum class ErrorModel { SmallAngle, Exact };

/// Misclassification probability of the midpoint rule for equal priors.
/// SmallAngle: erfc(sqrt2 alpha theta^2) / 2.
/// Exact: erfc(D / (2 sqrt2)) / 2 with peak separation D = 2 alpha (1 - cos2theta).
double error_probability(double theta, double alpha, ErrorModel mode = ErrorModel::SmallAngle);

struct DemoResult {
  Parity classification = Parity::Balanced;
  FockState post_state;
  HomodyneResult homodyne;
};

/// Two-mode state d1|1,1> + d2 (|2,0> + sign|0,2>)/sqrt2 with the probe
/// attached and both cross-Kerr cells applied.
PointerDecomposition prepare_demo_probe(Complex d1, Complex d2, int sign, const AnalyzerConfig& cfg);

/// The two-mode demonstrator conditioned on a given outcome x.
DemoResult run_two_mode_demo_at(Complex d1, Complex d2, int sign, const AnalyzerConfig& cfg, double x);
DemoResult run_two_mode_demo(Complex d1, Complex d2, int sign, const AnalyzerConfig& cfg, Rng& rng);

/// Signal after the first beam splitter with the probe attached and the
/// four cross-Kerr cells applied, i.e. the state the homodyne detector sees.
PointerDecomposition prepare_symmetry_probe(const TwoQubitState& q, const AnalyzerConfig& cfg);

/// Symmetry analyzer conditioned on the homodyne outcome x.
SymmetryOutcome run_symmetry_analyzer_at(const TwoQubitState& q, const AnalyzerConfig& cfg, double x);

/// Exact projection onto the singlet or the triplet subspace with Born
/// probabilities (the zero-overlap limit of the analyzer).
SymmetryOutcome project_symmetry(const TwoQubitState& q, Rng& rng);

/// Full analyzer: samples the homodyne outcome (or projects, when cfg.ideal).
SymmetryOutcome run_symmetry_analyzer(const TwoQubitState& q, const AnalyzerConfig& cfg, Rng& rng);

}  // namespace kerrbell
