#include "kerrbell/bell_detector.hpp"

#include <algorithm>
#include <array>

#include "kerrbell/errors.hpp"

namespace kerrbell {

namespace {

constexpr std::array<std::optional<Pauli>, 4> kSchedule = {std::nullopt, Pauli::X, Pauli::Z,
                                                           Pauli::X};
constexpr double kBellFidelityTolerance = 1e-9;

}  // namespace

BellLabel label_for_singlet_position(int position) {
  switch (position) {
    case 1: return BellLabel::PsiMinus;
    case 2: return BellLabel::PhiMinus;
    case 3: return BellLabel::PhiPlus;
    default: return BellLabel::PsiPlus;
  }
}

DetectionTrace bell_detect(const TwoQubitState& q, const AnalyzerConfig& cfg,
                           const DetectionPolicy& policy, Rng& rng) {
  DetectionTrace trace;
  TwoQubitState state = q;
  std::vector<Pauli> applied;
  std::optional<int> first_singlet;
  const int analyzers = policy.omit_final ? 3 : 4;

  for (int k = 1; k <= analyzers; ++k) {
    const std::optional<Pauli> before = kSchedule[k - 1];
    if (before) {
      state = apply_pauli(state, Qubit::Two, *before);
      applied.push_back(*before);
    }
    SymmetryOutcome outcome = run_symmetry_analyzer(state, cfg, rng);
    state = outcome.post_state;
    const bool singlet = outcome.classification == Symmetry::Singlet;
    trace.steps.push_back({before, std::move(outcome)});
    if (singlet && !first_singlet && k <= 3) {
      first_singlet = k;
      if (policy.early_exit) break;
    }
  }

  if (policy.early_exit && first_singlet) {
    trace.closing.assign(applied.rbegin(), applied.rend());
  } else if (policy.omit_final) {
    trace.closing = {Pauli::Y};
  } else {
    trace.closing = {Pauli::Z};
  }
  for (Pauli op : trace.closing) state = apply_pauli(state, Qubit::Two, op);

  trace.label = label_for_singlet_position(first_singlet.value_or(4));
  trace.post_state = state;
  return trace;
}

BellLabel ideal_label(const TwoQubitState& q) {
  std::optional<BellLabel> match;
  for (BellLabel label : kAllBellLabels) {
    if (fidelity(q, bell_state(label)) >= 1.0 - kBellFidelityTolerance) {
      if (match) throw NotABellState("state matches more than one Bell state");
      match = label;
    }
  }
  if (!match) throw NotABellState("state is not a Bell state");
  return *match;
}

}  // namespace kerrbell
