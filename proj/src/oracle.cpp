#include "kerrbell/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "kerrbell/errors.hpp"

namespace kerrbell::oracle {

namespace {

constexpr double kMinConditioningDensity = 1e-300;
constexpr int kTailTerms = 2000;

// Joint signal (x) probe amplitudes after the coupling, one row per signal
// occupation: d_j c_n exp(i theta k_j n).
struct JointState {
  std::vector<Occupation> occupations;
  std::vector<std::vector<Complex>> rows;
};

JointState evolve(const FockState& s, const OracleConfig& cfg, std::span<const int> weights) {
  cfg.validate();
  if (weights.size() != s.modes()) {
    throw std::invalid_argument("oracle: need one weight per signal mode");
  }
  const double tail = poisson_tail_mass(cfg.alpha, cfg.n_max);
  if (tail > kMaxTailMass) {
    throw TruncationOverflow("oracle: probe tail mass " + std::to_string(tail) +
                             " beyond n_max " + std::to_string(cfg.n_max));
  }
  std::vector<double> coherent(static_cast<std::size_t>(cfg.n_max) + 1);
  coherent[0] = std::exp(-0.5 * cfg.alpha * cfg.alpha);
  for (int n = 1; n <= cfg.n_max; ++n) {
    coherent[n] = coherent[n - 1] * cfg.alpha / std::sqrt(static_cast<double>(n));
  }

  JointState joint;
  for (const auto& [occ, d] : s.amplitudes()) {
    int shift = 0;
    for (std::size_t m = 0; m < weights.size(); ++m) shift += weights[m] * occ[m];
    std::vector<Complex> row(coherent.size());
    for (std::size_t n = 0; n < coherent.size(); ++n) {
      row[n] = d * coherent[n] * std::polar(1.0, cfg.theta * shift * static_cast<double>(n));
    }
    joint.occupations.push_back(occ);
    joint.rows.push_back(std::move(row));
  }
  return joint;
}

std::vector<Complex> project(const JointState& joint, int n_max, double x) {
  const std::vector<double> psi = quadrature_wavefunctions(n_max, x);
  std::vector<Complex> amps;
  amps.reserve(joint.rows.size());
  for (const auto& row : joint.rows) {
    Complex a{};
    for (std::size_t n = 0; n < row.size(); ++n) a += row[n] * psi[n];
    amps.push_back(a);
  }
  return amps;
}

double density_of(const std::vector<Complex>& amps) {
  double p = 0.0;
  for (const auto& a : amps) p += std::norm(a);
  return p;
}

}  // namespace

OracleConfig OracleConfig::with_defaults(double alpha, double theta) {
  OracleConfig cfg;
  cfg.alpha = alpha;
  cfg.theta = theta;
  cfg.n_max = static_cast<int>(std::ceil(alpha * alpha + 10.0 * alpha + 20.0));
  cfg.x_min = -2.0 * alpha - 12.0;
  cfg.x_max = 2.0 * alpha + 12.0;
  cfg.x_step = 0.01;
  return cfg;
}

void OracleConfig::validate() const {
  if (!(alpha >= 0.0 && alpha <= kMaxAlpha)) {
    throw std::invalid_argument("oracle: alpha must lie in [0, 4]");
  }
  if (!std::isfinite(theta)) throw std::invalid_argument("oracle: theta must be finite");
  if (n_max < 0) throw std::invalid_argument("oracle: n_max must be non-negative");
  if (!(x_step > 0.0) || !(x_max > x_min)) throw std::invalid_argument("oracle: bad x grid");
}

double DensityTable::integral() const {
  double sum = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) sum += 0.5 * (x[i] - x[i - 1]) * (p[i] + p[i - 1]);
  return sum;
}

double poisson_tail_mass(double alpha, int n_max) {
  if (alpha == 0.0) return 0.0;
  const double mean = alpha * alpha;
  const double log_mean = std::log(mean);
  double tail = 0.0;
  for (int n = n_max + 1; n <= n_max + kTailTerms; ++n) {
    const double term = std::exp(-mean + n * log_mean - std::lgamma(n + 1.0));
    tail += term;
    if (n > mean && term < 1e-30 * tail) break;
  }
  return tail;
}

std::vector<double> quadrature_wavefunctions(int n_max, double x) {
  std::vector<double> psi(static_cast<std::size_t>(n_max) + 1);
  psi[0] = std::pow(2.0 * std::numbers::pi, -0.25) * std::exp(-0.25 * x * x);
  if (n_max >= 1) psi[1] = x * psi[0];
  for (int n = 1; n < n_max; ++n) {
    psi[n + 1] = (x * psi[n] - std::sqrt(static_cast<double>(n)) * psi[n - 1]) /
                 std::sqrt(static_cast<double>(n + 1));
  }
  return psi;
}

double full_fock_density_at(const FockState& s, const OracleConfig& cfg,
                            std::span<const int> weights, double x) {
  const JointState joint = evolve(s, cfg, weights);
  return density_of(project(joint, cfg.n_max, x));
}

DensityTable full_fock_density(const FockState& s, const OracleConfig& cfg,
                               std::span<const int> weights) {
  const JointState joint = evolve(s, cfg, weights);
  DensityTable table;
  const auto cells = static_cast<std::size_t>(std::llround((cfg.x_max - cfg.x_min) / cfg.x_step));
  table.x.reserve(cells + 1);
  table.p.reserve(cells + 1);
  for (std::size_t i = 0; i <= cells; ++i) {
    const double x = cfg.x_min + cfg.x_step * static_cast<double>(i);
    table.x.push_back(x);
    table.p.push_back(density_of(project(joint, cfg.n_max, x)));
  }
  return table;
}

FockState full_fock_collapse(const FockState& s, const OracleConfig& cfg,
                             std::span<const int> weights, double x) {
  const JointState joint = evolve(s, cfg, weights);
  const std::vector<Complex> amps = project(joint, cfg.n_max, x);
  const double p = density_of(amps);
  if (p < kMinConditioningDensity) {
    throw ZeroDensity("oracle: homodyne density at x is numerically zero");
  }
  const double scale = 1.0 / std::sqrt(p);
  std::vector<std::pair<Occupation, Complex>> terms;
  for (std::size_t j = 0; j < amps.size(); ++j) terms.emplace_back(joint.occupations[j], amps[j] * scale);
  return FockState(s.modes(), terms, s.max_photons());
}

}  // namespace kerrbell::oracle
