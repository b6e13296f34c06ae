#pragma once

// Non-destructive Bell-state identification by repeated symmetry analysis
// interleaved with single-qubit Pauli operations on qubit 2.

#include <optional>
#include <vector>

#include "kerrbell/analyzers.hpp"
#include "kerrbell/fock.hpp"

namespace kerrbell {

struct DetectionPolicy {
  /// Stop at the first Singlet and restore the identified state locally.
  bool early_exit = false;
  /// Skip the fourth analyzer; no Singlet in the first three means PsiPlus.
  bool omit_final = false;
};

struct DetectionStep {
  std::optional<Pauli> pauli_before;  // applied to qubit 2 before this analyzer
  SymmetryOutcome outcome;
};

struct DetectionTrace {
  std::vector<DetectionStep> steps;
  std::vector<Pauli> closing;  // qubit-2 operations applied after the last analyzer
  BellLabel label = BellLabel::PsiPlus;
  TwoQubitState post_state;

  int analyzer_count() const { return static_cast<int>(steps.size()); }
};

/// Label announced when the first Singlet appears at analyzer `position`
/// (1-based). Positions past the third mean PsiPlus.
BellLabel label_for_singlet_position(int position);

/// Runs the detection schedule SA; X; SA; Z; SA; X; SA; Z (all Paulis on
/// qubit 2). With omit_final the closing operation after the third analyzer
/// is Y; with early_exit the accumulated Paulis are undone after the first
/// Singlet.
DetectionTrace bell_detect(const TwoQubitState& q, const AnalyzerConfig& cfg,
                           const DetectionPolicy& policy, Rng& rng);

/// The Bell label q matches with fidelity >= 1 - 1e-9. Throws NotABellState.
BellLabel ideal_label(const TwoQubitState& q);

}  // namespace kerrbell
