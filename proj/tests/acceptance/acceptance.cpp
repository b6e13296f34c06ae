// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Each criterion also checks its runtime budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "kerrbell/analyzers.hpp"
#include "kerrbell/bell_detector.hpp"
#include "kerrbell/experiment.hpp"
#include "kerrbell/oracle.hpp"
#include "kerrbell/pointer.hpp"
#include "kerrbell/stats.hpp"
#include "unit/test_util.hpp"

using namespace kerrbell;

namespace {

const double kH = 1.0 / std::numbers::sqrt2;

struct Verdict {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  double budget_seconds;
  std::function<Verdict()> body;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// The beam-split Bell states, as the circuit produces them.
std::vector<std::pair<std::string, FockState>> beam_split_bell_states() {
  std::vector<std::pair<std::string, FockState>> out;
  for (BellLabel l : kAllBellLabels) {
    out.emplace_back(std::string(to_string(l)), apply_beam_splitter(embed(bell_state(l))));
  }
  return out;
}

double density_integral(const PointerDecomposition& pd) {
  double lo = 1e300, hi = -1e300;
  for (const auto& b : pd.branches()) {
    lo = std::min(lo, 2.0 * b.beta.real());
    hi = std::max(hi, 2.0 * b.beta.real());
  }
  return fixtures::simpson([&](double x) { return homodyne_density(pd, x); }, lo - 12.0, hi + 12.0,
                          static_cast<int>((hi - lo + 24.0) / 0.01));
}

Verdict ac1_beam_splitter() {
  const double h = 0.5;
  struct Expected {
    BellLabel label;
    std::vector<std::pair<Occupation, Complex>> terms;
  };
  const std::vector<Expected> table = {
      {BellLabel::PsiMinus, {{{0, 1, 1, 0}, kH}, {{1, 0, 0, 1}, -kH}}},
      {BellLabel::PsiPlus, {{{1, 1, 0, 0}, kH}, {{0, 0, 1, 1}, -kH}}},
      {BellLabel::PhiPlus, {{{2, 0, 0, 0}, h}, {{0, 0, 2, 0}, -h}, {{0, 2, 0, 0}, h}, {{0, 0, 0, 2}, -h}}},
      {BellLabel::PhiMinus, {{{2, 0, 0, 0}, h}, {{0, 0, 2, 0}, -h}, {{0, 2, 0, 0}, -h}, {{0, 0, 0, 2}, h}}},
  };
  Verdict v;
  double worst = 0.0;
  for (const auto& e : table) {
    const FockState out = apply_beam_splitter(embed(bell_state(e.label)));
    const FockState expected(kSignalModes, e.terms);
    for (const auto& [occ, amp] : out.amplitudes()) worst = std::max(worst, std::abs(amp - expected.amplitude(occ)));
    for (const auto& [occ, amp] : expected.amplitudes()) worst = std::max(worst, std::abs(amp - out.amplitude(occ)));
    for (const auto& [occ, amp] : out.amplitudes()) {
      const int arm1 = occ[kArm1H] + occ[kArm1V];
      const bool balanced = arm1 == 1;
      if (balanced != (e.label == BellLabel::PsiMinus)) v.ok = false;
    }
  }
  v.ok = v.ok && worst <= 1e-12;
  v.detail = "max amplitude deviation " + fmt("%.2e", worst);
  return v;
}

Verdict ac2_error_formula() {
  const double at_threshold = error_probability(0.1, 1.2 / 0.01, ErrorModel::SmallAngle);
  const double nv = error_probability(0.1, std::sqrt(1.3e4), ErrorModel::SmallAngle);
  Verdict v;
  v.ok = at_threshold < 0.01 && std::abs(nv - 0.01) <= 0.003;
  v.detail = "P(1.2) = " + fmt("%.6f", at_threshold) + ", P(NV point) = " + fmt("%.6f", nv);
  return v;
}

Verdict ac3_monte_carlo() {
  ExperimentSpec spec;
  spec.command = Command::Sweep;
  spec.theta = 0.1;
  spec.trials = 10000;
  spec.seed = 2024;
  spec.k_values = {1.0, 1.2, 1.5};
  const RunReport r = run(spec);
  Verdict v;
  v.ok = r.passed;
  for (const auto& row : r.json["sweep"]) {
    v.detail += fmt("k=%.1f: ", row["alpha_theta_sq"].get<double>()) +
                fmt("%.4f", row["rate"].get<double>()) + " vs " +
                fmt("%.4f", row["expected"].get<double>()) +
                fmt(" (%+.2f sigma)  ", row["deviation_sigmas"].get<double>());
  }
  return v;
}

Verdict ac4_non_destructive() {
  AnalyzerConfig cfg;
  cfg.theta = 0.1;
  cfg.alpha = 150.0;
  std::mt19937_64 gen(404);
  Rng rng(405);
  double worst = 1.0;
  for (int i = 0; i <= 100; ++i) {
    const TwoQubitState q = i < 100 ? fixtures::random_triplet(gen) : bell_state(BellLabel::PsiMinus);
    const auto pd = prepare_symmetry_probe(q, cfg);
    const double x = sample_homodyne(pd, rng, cfg.grid);
    worst = std::min(worst, fidelity(run_symmetry_analyzer_at(q, cfg, x).post_state, q));
  }
  return {worst >= 1.0 - 1e-10, "min fidelity 1 - " + fmt("%.2e", 1.0 - worst)};
}

Verdict ac5_oracle() {
  double worst_density = 0.0, worst_amp = 0.0;
  for (double alpha : {1.0, 2.0, 3.0}) {
    for (double theta : {0.1, 0.3, 0.5}) {
      const auto ocfg = oracle::OracleConfig::with_defaults(alpha, theta);
      for (const auto& [name, s] : beam_split_bell_states()) {
        const auto pd = apply_cross_kerr(attach_probe(s, alpha), kAnalyzerWeights, theta);
        const auto table = oracle::full_fock_density(s, ocfg, kAnalyzerWeights);
        for (std::size_t i = 0; i < table.x.size(); ++i) {
          worst_density = std::max(worst_density, std::abs(table.p[i] - homodyne_density(pd, table.x[i])));
        }
        const double c2 = std::cos(2.0 * theta);
        for (double x : {2 * alpha * c2, alpha * (1 + c2), 2 * alpha, 2 * alpha * c2 - 1.5, 2 * alpha + 1.5}) {
          const FockState a = collapse(pd, x);
          const FockState b = oracle::full_fock_collapse(s, ocfg, kAnalyzerWeights, x);
          for (const auto& [occ, amp] : a.amplitudes()) worst_amp = std::max(worst_amp, std::abs(amp - b.amplitude(occ)));
          for (const auto& [occ, amp] : b.amplitudes()) worst_amp = std::max(worst_amp, std::abs(amp - a.amplitude(occ)));
        }
      }
    }
  }
  return {worst_density < 1e-8 && worst_amp < 1e-8,
          "max density deviation " + fmt("%.2e", worst_density) + ", max collapse deviation " +
              fmt("%.2e", worst_amp)};
}

Verdict ac6_ideal_bell() {
  AnalyzerConfig cfg;
  cfg.ideal = true;
  Rng rng(6);
  Verdict v;
  int runs = 0;
  for (bool early : {false, true}) {
    for (bool omit : {false, true}) {
      for (BellLabel l : kAllBellLabels) {
        const auto t = bell_detect(bell_state(l), cfg, {early, omit}, rng);
        const int position = l == BellLabel::PsiMinus ? 1 : l == BellLabel::PhiMinus ? 2 : l == BellLabel::PhiPlus ? 3 : 4;
        const int analyzers = omit ? 3 : 4;
        const int expected_count = early ? std::min(position, analyzers) : analyzers;
        const bool ok = t.label == l && std::abs(fidelity(t.post_state, bell_state(l)) - 1.0) <= 1e-10 &&
                        t.analyzer_count() == expected_count;
        if (!ok) {
          v.ok = false;
          v.detail += std::string(to_string(l)) + (early ? " early" : "") + (omit ? " omit" : "") + " failed; ";
        }
        ++runs;
      }
    }
  }
  if (v.ok) v.detail = std::to_string(runs) + " label/policy combinations correct";
  return v;
}

Verdict ac7_finite_bell() {
  ExperimentSpec spec;
  spec.command = Command::Bell;
  spec.theta = 0.1;
  spec.alpha = 1.5 / 0.01;
  spec.trials = 1000;
  spec.seed = 77;
  spec.input = "all";
  const RunReport r = run(spec);
  Verdict v;
  v.ok = r.passed;
  for (const auto& [name, entry] : r.json["bell"]["inputs"].items()) {
    const double fid = entry["min_fidelity_given_correct"].get<double>();
    if (fid < 1.0 - 1e-10) v.ok = false;
    v.detail += name + fmt(" %.3f", entry["accuracy"]["rate"].get<double>()) + "  ";
  }
  v.detail += fmt("(bound %.3f before 3 sigma)", r.json["bell"]["inputs"]["PsiMinus"]["accuracy_bound"].get<double>());
  return v;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

Verdict ac8_normalization_determinism() {
  double worst = 0.0;
  auto check = [&](const PointerDecomposition& pd) { worst = std::max(worst, std::abs(density_integral(pd) - 1.0)); };
  for (double k : {1.0, 1.2, 1.5}) {
    AnalyzerConfig cfg;
    cfg.theta = 0.1;
    cfg.alpha = k / 0.01;
    for (BellLabel l : kAllBellLabels) check(prepare_symmetry_probe(bell_state(l), cfg));
    check(prepare_symmetry_probe(TwoQubitState({0.5, 0.5, -0.5, 0.5}), cfg));
    for (int sign : {1, -1}) check(prepare_demo_probe(kH, kH, sign, cfg));
  }
  for (double alpha : {1.0, 2.0, 3.0}) {
    for (double theta : {0.1, 0.3, 0.5}) {
      const auto ocfg = oracle::OracleConfig::with_defaults(alpha, theta);
      for (const auto& [name, s] : beam_split_bell_states()) {
        check(apply_cross_kerr(attach_probe(s, alpha), kAnalyzerWeights, theta));
        worst = std::max(worst, std::abs(oracle::full_fock_density(s, ocfg, kAnalyzerWeights).integral() - 1.0));
      }
    }
  }

  const auto dir = std::filesystem::temp_directory_path() / "kerrbell_acceptance";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  bool identical = true;
  for (Command c : {Command::Symmetry, Command::Bell, Command::Demo2Mode}) {
    std::vector<std::string> contents[2];
    for (int rep = 0; rep < 2; ++rep) {
      ExperimentSpec spec;
      spec.command = c;
      spec.alpha = 120.0;
      spec.trials = 300;
      spec.seed = 99;
      spec.out = (dir / (std::string(to_string(c)) + ".json")).string();
      for (const auto& f : run(spec).files) contents[rep].push_back(slurp(f));
    }
    identical = identical && contents[0] == contents[1] && !contents[0].empty();
  }
  return {worst <= 1e-9 && identical,
          "max normalization deviation " + fmt("%.2e", worst) + (identical ? ", reports identical" : ", reports differ")};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "beam splitter maps Bell states to balanced and bunched pairs", 1.0, ac1_beam_splitter},
      {"AC2", "small-angle error formula at the quoted operating points", 1.0, ac2_error_formula},
      {"AC3", "Monte Carlo misclassification within 3 sigma of the exact error", 30.0, ac3_monte_carlo},
      {"AC4", "symmetry analyzer leaves triplets and the singlet unchanged", 10.0, ac4_non_destructive},
      {"AC5", "pointer engine agrees with the full Fock oracle", 60.0, ac5_oracle},
      {"AC6", "ideal Bell detector under every policy", 1.0, ac6_ideal_bell},
      {"AC7", "finite-resource Bell detector accuracy and fidelity", 60.0, ac7_finite_bell},
      {"AC8", "density normalization and bit-identical reports", 120.0, ac8_normalization_determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.body();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.budget_seconds;
    const bool pass = v.ok && in_time;
    if (!pass) ++failures;
    std::printf("[%s] %s %s: %s (%.2f s%s)\n", pass ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(),
                v.detail.c_str(), seconds, in_time ? "" : ", over budget");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
