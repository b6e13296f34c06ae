#include "kerrbell/analyzers.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "kerrbell/errors.hpp"

namespace kerrbell {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_phase(double phase) {
  double r = std::fmod(phase, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a tiny negative value can round up to exactly 2pi.
  return r >= kTwoPi ? 0.0 : r;
}

HomodyneResult homodyne_result(const PointerDecomposition& pd, const AnalyzerConfig& cfg, double x) {
  HomodyneResult r;
  r.x = x;
  r.density = homodyne_density(pd, x);
  r.classification = classify(x, cfg.theta, cfg.alpha);
  r.phi = phase_phi(x, cfg.theta, cfg.alpha);
  r.correction = correction_phase(x, cfg.theta, cfg.alpha);
  return r;
}

}  // namespace

void AnalyzerConfig::validate() const {
  if (!(theta > 0.0 && theta <= std::numbers::pi / 4.0)) {
    throw std::invalid_argument("theta must lie in (0, pi/4], got " + std::to_string(theta));
  }
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("alpha must be finite and non-negative");
  }
  if (!(grid.step > 0.0) || !(grid.half_width > 0.0)) {
    throw std::invalid_argument("sampling grid step and half width must be positive");
  }
}

std::string_view to_string(Parity p) { return p == Parity::Balanced ? "Balanced" : "Bunched"; }
std::string_view to_string(Symmetry s) { return s == Symmetry::Singlet ? "Singlet" : "Triplet"; }

double phase_phi(double x, double theta, double alpha) {
  return wrap_phase(alpha * std::sin(2.0 * theta) * (x - 2.0 * alpha * std::cos(2.0 * theta)));
}

double correction_phase(double x, double theta, double alpha) {
  return wrap_phase(alpha * std::sin(2.0 * theta) * (x - alpha * std::cos(2.0 * theta)));
}

double decision_threshold(double theta, double alpha) {
  return alpha * (1.0 + std::cos(2.0 * theta));
}

Parity classify(double x, double theta, double alpha) {
  return x >= decision_threshold(theta, alpha) ? Parity::Balanced : Parity::Bunched;
}

double error_probability(double theta, double alpha, ErrorModel mode) {
  if (mode == ErrorModel::SmallAngle) {
    return 0.5 * std::erfc(std::numbers::sqrt2 * alpha * theta * theta);
  }
  const double separation = 2.0 * alpha * (1.0 - std::cos(2.0 * theta));
  return 0.5 * std::erfc(separation / (2.0 * std::numbers::sqrt2));
}

PointerDecomposition prepare_demo_probe(Complex d1, Complex d2, int sign, const AnalyzerConfig& cfg) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("demo sign must be +1 or -1");
  const double h = 1.0 / std::numbers::sqrt2;
  const FockState input(2, {{{1, 1}, d1}, {{2, 0}, d2 * h}, {{0, 2}, d2 * h * double(sign)}});
  return apply_cross_kerr(attach_probe(input, cfg.alpha), kDemoWeights, cfg.theta);
}

namespace {

DemoResult demo_at(const PointerDecomposition& pd, const AnalyzerConfig& cfg, double x) {
  HomodyneResult hr = homodyne_result(pd, cfg, x);
  FockState post = apply_phase_shifter(collapse(pd, x), kDemoCorrectedModes, -hr.correction);
  return DemoResult{hr.classification, std::move(post), hr};
}

}  // namespace

DemoResult run_two_mode_demo_at(Complex d1, Complex d2, int sign, const AnalyzerConfig& cfg, double x) {
  return demo_at(prepare_demo_probe(d1, d2, sign, cfg), cfg, x);
}

DemoResult run_two_mode_demo(Complex d1, Complex d2, int sign, const AnalyzerConfig& cfg, Rng& rng) {
  cfg.validate();
  const PointerDecomposition pd = prepare_demo_probe(d1, d2, sign, cfg);
  return demo_at(pd, cfg, sample_homodyne(pd, rng, cfg.grid));
}

PointerDecomposition prepare_symmetry_probe(const TwoQubitState& q, const AnalyzerConfig& cfg) {
  // The PBS split and the polarization rotations that give every photon the
  // same polarization are mode relabelings; the four modes are tracked
  // directly.
  const FockState mixed = apply_beam_splitter(embed(q));
  return apply_cross_kerr(attach_probe(mixed, cfg.alpha), kAnalyzerWeights, cfg.theta);
}

namespace {

SymmetryOutcome symmetry_at(const PointerDecomposition& pd, const AnalyzerConfig& cfg, double x) {
  HomodyneResult hr = homodyne_result(pd, cfg, x);
  const FockState corrected =
      apply_phase_shifter(collapse(pd, x), kAnalyzerCorrectedModes, -hr.correction);
  SymmetryOutcome out;
  out.classification =
      hr.classification == Parity::Balanced ? Symmetry::Singlet : Symmetry::Triplet;
  out.post_state = extract(apply_beam_splitter(corrected));
  out.homodyne = hr;
  return out;
}

}  // namespace

SymmetryOutcome run_symmetry_analyzer_at(const TwoQubitState& q, const AnalyzerConfig& cfg, double x) {
  return symmetry_at(prepare_symmetry_probe(q, cfg), cfg, x);
}

SymmetryOutcome project_symmetry(const TwoQubitState& q, Rng& rng) {
  const TwoQubitState singlet = bell_state(BellLabel::PsiMinus);
  const Complex overlap = inner_product(singlet, q);
  const double p_singlet = std::norm(overlap);
  SymmetryOutcome out;
  if (uniform01(rng) < p_singlet) {
    out.classification = Symmetry::Singlet;
    // Keep the input's phase on the singlet component.
    std::array<Complex, 4> amps{};
    for (std::size_t i = 0; i < 4; ++i) amps[i] = overlap * singlet.amplitudes()[i];
    out.post_state = TwoQubitState(amps);
  } else {
    out.classification = Symmetry::Triplet;
    std::array<Complex, 4> amps = q.amplitudes();
    for (std::size_t i = 0; i < 4; ++i) amps[i] -= overlap * singlet.amplitudes()[i];
    out.post_state = TwoQubitState(amps);
  }
  return out;
}

SymmetryOutcome run_symmetry_analyzer(const TwoQubitState& q, const AnalyzerConfig& cfg, Rng& rng) {
  if (cfg.ideal) return project_symmetry(q, rng);
  cfg.validate();
  const PointerDecomposition pd = prepare_symmetry_probe(q, cfg);
  return symmetry_at(pd, cfg, sample_homodyne(pd, rng, cfg.grid));
}

}  // namespace kerrbell
