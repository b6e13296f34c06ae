#include "kerrbell/experiment.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "kerrbell/analyzers.hpp"
#include "kerrbell/bell_detector.hpp"
#include "kerrbell/errors.hpp"
#include "kerrbell/oracle.hpp"
#include "kerrbell/pointer.hpp"
#include "kerrbell/random.hpp"
#include "kerrbell/stats.hpp"

namespace kerrbell {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kOracleTolerance = 1e-8;
constexpr double kNormalizationTolerance = 1e-9;
constexpr std::array<double, 8> kDefaultSweep = {0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0};
constexpr std::array<BellLabel, 3> kTripletCycle = {BellLabel::PsiPlus, BellLabel::PhiPlus,
                                                    BellLabel::PhiMinus};

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json complex_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Json state_json(const TwoQubitState& q) {
  Json arr = Json::array();
  for (const auto& a : q.amplitudes()) arr.push_back(complex_json(a));
  return arr;
}

AnalyzerConfig analyzer_config(const ExperimentSpec& spec) {
  AnalyzerConfig cfg;
  cfg.theta = spec.theta;
  cfg.alpha = spec.alpha;
  cfg.seed = spec.seed;
  cfg.grid.step = spec.grid_step;
  cfg.ideal = spec.ideal;
  return cfg;
}

Json analytic_json(double theta, double alpha) {
  return Json{{"small_angle", error_probability(theta, alpha, ErrorModel::SmallAngle)},
              {"exact", error_probability(theta, alpha, ErrorModel::Exact)}};
}

Json proportion_json(const Proportion& p) {
  const auto [lo, hi] = p.wilson();
  return Json{{"count", p.successes}, {"trials", p.trials}, {"rate", p.rate()},
              {"ci_low", lo}, {"ci_high", hi}};
}

std::filesystem::path sibling(const std::filesystem::path& out, std::string_view suffix) {
  return out.parent_path() / (out.stem().string() + std::string(suffix));
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw InvalidSpec("cannot open output file " + path.string());
  f << text;
}

std::string density_csv(const PointerDecomposition& pd, double step) {
  double lo = 2.0 * pd.branches().front().beta.real();
  double hi = lo;
  for (const auto& b : pd.branches()) {
    lo = std::min(lo, 2.0 * b.beta.real());
    hi = std::max(hi, 2.0 * b.beta.real());
  }
  lo -= 8.0;
  hi += 8.0;
  const auto cells = static_cast<std::size_t>(std::ceil((hi - lo) / step));
  std::ostringstream os;
  os << "x,p\n";
  for (std::size_t i = 0; i <= cells; ++i) {
    const double x = lo + step * static_cast<double>(i);
    os << format_double(x) << ',' << format_double(homodyne_density(pd, x)) << '\n';
  }
  return os.str();
}

// --- input resolution ------------------------------------------------------

enum class InputKind { Calibration, AllBell, State };

struct ResolvedInput {
  InputKind kind = InputKind::State;
  TwoQubitState state;
  std::string name;
};

ResolvedInput resolve_qubit_input(const ExperimentSpec& spec, std::string_view fallback) {
  const std::string text = spec.input.empty() ? std::string(fallback) : spec.input;
  ResolvedInput r;
  r.name = text;
  if (text == "calibration") {
    r.kind = InputKind::Calibration;
  } else if (text == "all") {
    r.kind = InputKind::AllBell;
  } else if (auto label = parse_bell_label(text)) {
    r.state = bell_state(*label);
  } else {
    const auto amps = parse_amplitudes(text, 4);
    try {
      r.state = TwoQubitState({amps[0], amps[1], amps[2], amps[3]});
    } catch (const std::invalid_argument& e) {
      throw InvalidSpec(std::string("--input: ") + e.what());
    }
    r.name = "custom";
  }
  return r;
}

TwoQubitState calibration_input(std::size_t trial, bool& singlet) {
  singlet = trial % 2 == 0;
  if (singlet) return bell_state(BellLabel::PsiMinus);
  return bell_state(kTripletCycle[(trial / 2) % kTripletCycle.size()]);
}

struct CalibrationResult {
  Proportion errors;
  double min_post_fidelity = 1.0;
};

// Alternating singlet / triplet Bell inputs; counts misclassifications.
CalibrationResult run_calibration(const AnalyzerConfig& cfg, std::size_t trials, std::uint64_t seed,
                                  std::size_t stream_offset) {
  CalibrationResult r;
  r.errors.trials = trials;
  for (std::size_t i = 0; i < trials; ++i) {
    Rng rng = trial_rng(seed, stream_offset + i);
    bool singlet = false;
    const TwoQubitState input = calibration_input(i, singlet);
    const SymmetryOutcome out = run_symmetry_analyzer(input, cfg, rng);
    if ((out.classification == Symmetry::Singlet) != singlet) ++r.errors.successes;
    r.min_post_fidelity = std::min(r.min_post_fidelity, fidelity(out.post_state, input));
  }
  return r;
}

Json calibration_json(const CalibrationResult& c, double expected) {
  const double sigma = Proportion::sigma(expected, c.errors.trials);
  const double deviation = sigma > 0.0 ? (c.errors.rate() - expected) / sigma
                                       : (c.errors.rate() == expected ? 0.0 : INFINITY);
  Json j = proportion_json(c.errors);
  j["expected"] = expected;
  j["sigma"] = sigma;
  j["deviation_sigmas"] = std::isfinite(deviation) ? Json(deviation) : Json(nullptr);
  j["within_3sigma"] = std::abs(deviation) <= 3.0;
  j["min_post_fidelity"] = c.min_post_fidelity;
  return j;
}

// --- commands --------------------------------------------------------------

void run_demo(const ExperimentSpec& spec, RunReport& report) {
  const AnalyzerConfig cfg = analyzer_config(spec);
  Complex d1 = 1.0 / std::numbers::sqrt2;
  Complex d2 = d1;
  if (!spec.input.empty()) {
    const auto amps = parse_amplitudes(spec.input, 2);
    d1 = amps[0];
    d2 = amps[1];
  }
  const double norm = std::sqrt(std::norm(d1) + std::norm(d2));
  if (!(norm > 0.0)) throw InvalidSpec("--input: demo amplitudes must not both vanish");
  d1 /= norm;
  d2 /= norm;

  const double h = 1.0 / std::numbers::sqrt2;
  const FockState balanced(2, {{{1, 1}, 1.0}});
  const FockState bunched(2, {{{2, 0}, h}, {{0, 2}, h * spec.sign}});

  Proportion balanced_count;
  balanced_count.trials = static_cast<std::size_t>(spec.trials);
  double fid_balanced = 0.0, fid_bunched = 0.0;
  for (std::size_t i = 0; i < balanced_count.trials; ++i) {
    Rng rng = trial_rng(spec.seed, i);
    const DemoResult r = run_two_mode_demo(d1, d2, spec.sign, cfg, rng);
    if (r.classification == Parity::Balanced) {
      ++balanced_count.successes;
      fid_balanced += fidelity(r.post_state, balanced);
    } else {
      fid_bunched += fidelity(r.post_state, bunched);
    }
  }
  const std::size_t n_bal = balanced_count.successes;
  const std::size_t n_bun = balanced_count.trials - n_bal;
  const double p_err = error_probability(spec.theta, spec.alpha, ErrorModel::Exact);
  const double predicted = std::norm(d1) * (1.0 - p_err) + std::norm(d2) * p_err;
  const double sigma = Proportion::sigma(predicted, balanced_count.trials);
  const bool within = std::abs(balanced_count.rate() - predicted) <= 3.0 * sigma + 1e-15;
  report.passed = within;
  report.json["demo"] = Json{
      {"d1", complex_json(d1)},
      {"d2", complex_json(d2)},
      {"sign", spec.sign},
      {"balanced", proportion_json(balanced_count)},
      {"predicted_balanced_rate", predicted},
      {"within_3sigma", within},
      {"mean_fidelity_balanced", n_bal ? Json(fid_balanced / double(n_bal)) : Json(nullptr)},
      {"mean_fidelity_bunched", n_bun ? Json(fid_bunched / double(n_bun)) : Json(nullptr)},
  };
  if (!spec.out.empty()) {
    const auto csv = sibling(spec.out, "_density.csv");
    write_text(csv, density_csv(prepare_demo_probe(d1, d2, spec.sign, cfg), spec.grid_step));
    report.files.push_back(csv);
  }
}

void run_symmetry(const ExperimentSpec& spec, RunReport& report) {
  const AnalyzerConfig cfg = analyzer_config(spec);
  const ResolvedInput input = resolve_qubit_input(spec, "calibration");
  const auto trials = static_cast<std::size_t>(spec.trials);
  const double p_err = spec.ideal ? 0.0 : error_probability(spec.theta, spec.alpha, ErrorModel::Exact);
  Json j;
  j["input"] = input.name;
  TwoQubitState display = input.state;

  if (input.kind == InputKind::AllBell) {
    throw InvalidSpec("--input all applies to the bell command");
  }
  if (input.kind == InputKind::Calibration) {
    const CalibrationResult c = run_calibration(cfg, trials, spec.seed, 0);
    j["misclassification"] = calibration_json(c, p_err);
    report.passed = j["misclassification"]["within_3sigma"].get<bool>();
    display = TwoQubitState({0.5, 0.5, -0.5, 0.5});  // (PsiMinus + PhiPlus)/sqrt2
  } else {
    const TwoQubitState singlet = bell_state(BellLabel::PsiMinus);
    const Complex overlap = inner_product(singlet, input.state);
    std::array<Complex, 4> s_amps{}, t_amps = input.state.amplitudes();
    for (std::size_t i = 0; i < 4; ++i) {
      s_amps[i] = overlap * singlet.amplitudes()[i];
      t_amps[i] -= s_amps[i];
    }
    const double p_singlet = std::norm(overlap);
    Proportion singlets;
    singlets.trials = trials;
    double fid_sum = 0.0;
    for (std::size_t i = 0; i < trials; ++i) {
      Rng rng = trial_rng(spec.seed, i);
      const SymmetryOutcome out = run_symmetry_analyzer(input.state, cfg, rng);
      const bool is_singlet = out.classification == Symmetry::Singlet;
      if (is_singlet) ++singlets.successes;
      const auto& branch = is_singlet ? s_amps : t_amps;
      double weight = 0.0;
      for (const auto& a : branch) weight += std::norm(a);
      if (weight > 0.0) fid_sum += fidelity(out.post_state, TwoQubitState(branch));
    }
    const double predicted = p_singlet * (1.0 - p_err) + (1.0 - p_singlet) * p_err;
    const double sigma = Proportion::sigma(predicted, trials);
    const bool within = std::abs(singlets.rate() - predicted) <= 3.0 * sigma + 1e-15;
    report.passed = within;
    j["state"] = state_json(input.state);
    j["singlet"] = proportion_json(singlets);
    j["singlet_probability"] = p_singlet;
    j["predicted_singlet_rate"] = predicted;
    j["within_3sigma"] = within;
    j["mean_projected_fidelity"] = fid_sum / double(trials);
  }
  report.json["symmetry"] = j;
  if (!spec.out.empty() && !spec.ideal) {
    const auto csv = sibling(spec.out, "_density.csv");
    write_text(csv, density_csv(prepare_symmetry_probe(display, cfg), spec.grid_step));
    report.files.push_back(csv);
  }
}

void run_bell(const ExperimentSpec& spec, RunReport& report) {
  const AnalyzerConfig cfg = analyzer_config(spec);
  const DetectionPolicy policy{spec.early_exit, spec.omit_final};
  const ResolvedInput input = resolve_qubit_input(spec, "all");
  if (input.kind == InputKind::Calibration) {
    throw InvalidSpec("--input calibration applies to symmetry and sweep");
  }
  const auto trials = static_cast<std::size_t>(spec.trials);
  const double p_err = spec.ideal ? 0.0 : error_probability(spec.theta, spec.alpha, ErrorModel::Exact);
  const double bound = std::max(0.0, 1.0 - 4.0 * p_err);
  const double sigma = Proportion::sigma(bound, trials);

  std::vector<std::pair<std::string, TwoQubitState>> inputs;
  if (input.kind == InputKind::AllBell) {
    for (BellLabel l : kAllBellLabels) inputs.emplace_back(std::string(to_string(l)), bell_state(l));
  } else {
    inputs.emplace_back(input.name, input.state);
  }

  Json confusion = Json::object();
  Json per_input = Json::object();
  bool passed = true;
  for (std::size_t row = 0; row < inputs.size(); ++row) {
    const auto& [name, state] = inputs[row];
    std::optional<BellLabel> truth;
    try {
      truth = ideal_label(state);
    } catch (const NotABellState&) {
    }
    std::map<BellLabel, std::size_t> counts;
    std::size_t analyzer_total = 0;
    double min_fid = 1.0, fid_sum = 0.0;
    for (std::size_t i = 0; i < trials; ++i) {
      Rng rng = trial_rng(spec.seed, row * trials + i);
      const DetectionTrace t = bell_detect(state, cfg, policy, rng);
      ++counts[t.label];
      analyzer_total += static_cast<std::size_t>(t.analyzer_count());
      if (truth && t.label == *truth) {
        const double f = fidelity(t.post_state, state);
        min_fid = std::min(min_fid, f);
        fid_sum += f;
      }
    }
    Json row_json = Json::object();
    for (BellLabel l : kAllBellLabels) row_json[std::string(to_string(l))] = double(counts[l]) / double(trials);
    confusion[name] = row_json;

    Json entry{{"mean_analyzer_count", double(analyzer_total) / double(trials)}};
    if (truth) {
      Proportion correct{counts[*truth], trials};
      const bool ok = correct.rate() >= bound - 3.0 * sigma - 1e-15;
      passed = passed && ok;
      entry["accuracy"] = proportion_json(correct);
      entry["accuracy_bound"] = bound;
      entry["meets_bound"] = ok;
      entry["min_fidelity_given_correct"] = correct.successes ? Json(min_fid) : Json(nullptr);
      entry["mean_fidelity_given_correct"] =
          correct.successes ? Json(fid_sum / double(correct.successes)) : Json(nullptr);
    } else {
      Json born = Json::object();
      for (BellLabel l : kAllBellLabels) born[std::string(to_string(l))] = fidelity(state, bell_state(l));
      entry["state"] = state_json(state);
      entry["bell_overlaps"] = born;
    }
    per_input[name] = entry;
  }
  report.passed = passed;
  report.json["bell"] = Json{{"policy", {{"early_exit", policy.early_exit}, {"omit_final", policy.omit_final}}},
                             {"confusion", confusion},
                             {"inputs", per_input}};
}

void run_sweep(const ExperimentSpec& spec, RunReport& report) {
  if (!spec.input.empty() && spec.input != "calibration") {
    throw InvalidSpec("sweep runs the calibration campaign; --input must be empty or 'calibration'");
  }
  const std::vector<double> ks =
      spec.k_values.empty() ? std::vector<double>(kDefaultSweep.begin(), kDefaultSweep.end())
                            : spec.k_values;
  const auto trials = static_cast<std::size_t>(spec.trials);
  std::ostringstream csv;
  csv << "alpha_theta_sq,analytic,empirical,ci_low,ci_high\n";
  Json rows = Json::array();
  bool passed = true;
  for (std::size_t p = 0; p < ks.size(); ++p) {
    AnalyzerConfig cfg = analyzer_config(spec);
    cfg.alpha = ks[p] / (spec.theta * spec.theta);
    const CalibrationResult c = run_calibration(cfg, trials, spec.seed, p * trials);
    const double small = error_probability(cfg.theta, cfg.alpha, ErrorModel::SmallAngle);
    const double exact = error_probability(cfg.theta, cfg.alpha, ErrorModel::Exact);
    const auto [lo, hi] = c.errors.wilson();
    Json row = calibration_json(c, exact);
    row["alpha_theta_sq"] = ks[p];
    row["alpha"] = cfg.alpha;
    row["analytic_small_angle"] = small;
    row["analytic_exact"] = exact;
    passed = passed && row["within_3sigma"].get<bool>();
    rows.push_back(row);
    csv << format_double(ks[p]) << ',' << format_double(small) << ',' << format_double(c.errors.rate())
        << ',' << format_double(lo) << ',' << format_double(hi) << '\n';
  }
  report.passed = passed;
  report.json["sweep"] = rows;
  if (!spec.out.empty()) {
    const auto path = sibling(spec.out, "_sweep.csv");
    write_text(path, csv.str());
    report.files.push_back(path);
  }
}

double max_amplitude_deviation(const FockState& a, const FockState& b) {
  double dev = 0.0;
  for (const auto& [occ, amp] : a.amplitudes()) dev = std::max(dev, std::abs(amp - b.amplitude(occ)));
  for (const auto& [occ, amp] : b.amplitudes()) dev = std::max(dev, std::abs(amp - a.amplitude(occ)));
  return dev;
}

void run_oracle_check(const ExperimentSpec& spec, RunReport& report) {
  oracle::OracleConfig ocfg = oracle::OracleConfig::with_defaults(spec.alpha, spec.theta);
  ocfg.x_step = spec.grid_step;

  struct Case {
    std::string name;
    FockState signal;
    std::vector<int> weights;
  };
  std::vector<Case> cases;
  for (BellLabel l : kAllBellLabels) {
    cases.push_back({"beam_split_" + std::string(to_string(l)), apply_beam_splitter(embed(bell_state(l))),
                     std::vector<int>(kAnalyzerWeights.begin(), kAnalyzerWeights.end())});
  }
  const double h = 1.0 / std::numbers::sqrt2;
  for (int sign : {1, -1}) {
    cases.push_back({sign > 0 ? "demo_plus" : "demo_minus",
                     FockState(2, {{{1, 1}, h}, {{2, 0}, 0.5}, {{0, 2}, 0.5 * sign}}),
                     std::vector<int>(kDemoWeights.begin(), kDemoWeights.end())});
  }
  const double c2 = std::cos(2.0 * spec.theta);
  const std::array<double, 5> probe_points = {2.0 * spec.alpha * c2, spec.alpha * (1.0 + c2),
                                              2.0 * spec.alpha, 2.0 * spec.alpha * c2 - 1.0,
                                              2.0 * spec.alpha + 1.0};

  double worst_density = 0.0, worst_amplitude = 0.0, worst_norm = 0.0, min_fid = 1.0;
  Json per_case = Json::object();
  for (const auto& c : cases) {
    const PointerDecomposition pd =
        apply_cross_kerr(attach_probe(c.signal, spec.alpha), c.weights, spec.theta);
    const oracle::DensityTable table = oracle::full_fock_density(c.signal, ocfg, c.weights);
    double dev = 0.0;
    oracle::DensityTable pointer_table{table.x, {}};
    for (std::size_t i = 0; i < table.x.size(); ++i) {
      pointer_table.p.push_back(homodyne_density(pd, table.x[i]));
      dev = std::max(dev, std::abs(pointer_table.p.back() - table.p[i]));
    }
    const double norm_dev =
        std::max(std::abs(table.integral() - 1.0), std::abs(pointer_table.integral() - 1.0));
    double amp_dev = 0.0;
    double fid = 1.0;
    for (double x : probe_points) {
      const FockState a = collapse(pd, x);
      const FockState b = oracle::full_fock_collapse(c.signal, ocfg, c.weights, x);
      amp_dev = std::max(amp_dev, max_amplitude_deviation(a, b));
      fid = std::min(fid, fidelity(a, b));
    }
    worst_density = std::max(worst_density, dev);
    worst_amplitude = std::max(worst_amplitude, amp_dev);
    worst_norm = std::max(worst_norm, norm_dev);
    min_fid = std::min(min_fid, fid);
    per_case[c.name] = Json{{"max_density_deviation", dev},
                            {"max_collapse_amplitude_deviation", amp_dev},
                            {"min_collapse_fidelity", fid},
                            {"normalization_deviation", norm_dev}};
  }
  report.passed = worst_density < kOracleTolerance && worst_amplitude < kOracleTolerance &&
                  worst_norm < kNormalizationTolerance;
  report.json["oracle"] = Json{{"n_max", ocfg.n_max},
                               {"x_min", ocfg.x_min},
                               {"x_max", ocfg.x_max},
                               {"x_step", ocfg.x_step},
                               {"tolerance", kOracleTolerance},
                               {"max_density_deviation", worst_density},
                               {"max_collapse_amplitude_deviation", worst_amplitude},
                               {"min_collapse_fidelity", min_fid},
                               {"max_normalization_deviation", worst_norm},
                               {"cases", per_case}};
}

}  // namespace

std::string_view to_string(Command c) {
  switch (c) {
    case Command::Demo2Mode: return "demo2mode";
    case Command::Symmetry: return "symmetry";
    case Command::Bell: return "bell";
    case Command::Sweep: return "sweep";
    case Command::OracleCheck: return "oracle-check";
  }
  return "?";
}

std::optional<Command> parse_command(std::string_view text) {
  for (Command c : {Command::Demo2Mode, Command::Symmetry, Command::Bell, Command::Sweep,
                    Command::OracleCheck}) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

std::vector<Complex> parse_amplitudes(std::string_view text, std::size_t expected) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    double v = 0.0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size() || !std::isfinite(v)) {
      throw InvalidSpec("--input: cannot parse '" + std::string(token) +
                        "' (expected a Bell label or comma-separated amplitudes)");
    }
    values.push_back(v);
    pos = comma + 1;
  }
  std::vector<Complex> amps;
  if (values.size() == expected) {
    for (double v : values) amps.emplace_back(v, 0.0);
  } else if (values.size() == 2 * expected) {
    for (std::size_t i = 0; i < expected; ++i) amps.emplace_back(values[2 * i], values[2 * i + 1]);
  } else {
    throw InvalidSpec("--input: expected " + std::to_string(expected) + " real or " +
                      std::to_string(2 * expected) + " re,im values, got " +
                      std::to_string(values.size()));
  }
  return amps;
}

void ExperimentSpec::validate() const {
  if (trials < 1) throw InvalidSpec("--trials must be at least 1");
  if (!(theta > 0.0 && theta <= std::numbers::pi / 4.0)) {
    throw InvalidSpec("--theta must lie in (0, pi/4]");
  }
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw InvalidSpec("--alpha must be finite and >= 0");
  if (command == Command::OracleCheck && alpha > oracle::kMaxAlpha) {
    throw InvalidSpec("oracle-check supports --alpha up to 4");
  }
  if (!(grid_step > 0.0 && grid_step <= 0.01)) throw InvalidSpec("--grid-step must lie in (0, 0.01]");
  if (sign != 1 && sign != -1) throw InvalidSpec("--sign must be +1 or -1");
  for (double k : k_values) {
    if (!(k > 0.0) || !std::isfinite(k)) throw InvalidSpec("--k-values must be positive");
  }
  if (ideal && command != Command::Symmetry && command != Command::Bell) {
    throw InvalidSpec("--ideal applies to the symmetry and bell commands");
  }
}

nlohmann::ordered_json ExperimentSpec::to_json() const {
  return Json{{"command", to_string(command)},
              {"theta", theta},
              {"alpha", alpha},
              {"trials", trials},
              {"seed", seed},
              {"input", input},
              {"early_exit", early_exit},
              {"omit_final", omit_final},
              {"ideal", ideal},
              {"out", out},
              {"grid_step", grid_step},
              {"sign", sign},
              {"k_values", k_values}};
}

RunReport run(const ExperimentSpec& spec) {
  spec.validate();
  RunReport report;
  report.json["spec"] = spec.to_json();
  report.json["analytic"] = analytic_json(spec.theta, spec.alpha);
  switch (spec.command) {
    case Command::Demo2Mode: run_demo(spec, report); break;
    case Command::Symmetry: run_symmetry(spec, report); break;
    case Command::Bell: run_bell(spec, report); break;
    case Command::Sweep: run_sweep(spec, report); break;
    case Command::OracleCheck: run_oracle_check(spec, report); break;
  }
  Json files = Json::array();
  for (const auto& f : report.files) files.push_back(f.filename().string());
  report.json["files"] = files;
  report.json["passed"] = report.passed;
  if (!spec.out.empty()) {
    write_text(spec.out, report.json.dump(2) + "\n");
    report.files.insert(report.files.begin(), std::filesystem::path(spec.out));
  }
  return report;
}

}  // namespace kerrbell
