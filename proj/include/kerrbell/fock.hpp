#pragma once

// Polarization qubits, truncated multimode Fock states and the passive
// linear-optical elements acting on them.

#include <array>
#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace kerrbell {

using Complex = std::complex<double>;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kPruneThreshold = 1e-14;
inline constexpr int kDefaultMaxPhotons = 2;

// ---------------------------------------------------------------------------
// Two-qubit polarization states
// ---------------------------------------------------------------------------

/// Index into TwoQubitState amplitudes. The first letter is qubit 1.
enum class Basis2 : std::size_t { HH = 0, HV = 1, VH = 2, VV = 3 };

enum class BellLabel { PsiMinus, PsiPlus, PhiMinus, PhiPlus };

inline constexpr std::array<BellLabel, 4> kAllBellLabels = {
    BellLabel::PsiMinus, BellLabel::PsiPlus, BellLabel::PhiMinus, BellLabel::PhiPlus};

std::string_view to_string(BellLabel label);
std::optional<BellLabel> parse_bell_label(std::string_view text);

enum class Pauli { X, Y, Z };
enum class Qubit { One, Two };

std::string_view to_string(Pauli op);

/// Normalized pure state over {HH, HV, VH, VV}. Construction normalizes.
class TwoQubitState {
 public:
  TwoQubitState();  // |HH>
  explicit TwoQubitState(const std::array<Complex, 4>& amps);

  static TwoQubitState basis(Basis2 index);

  const Complex& operator[](Basis2 index) const { return amps_[static_cast<std::size_t>(index)]; }
  const std::array<Complex, 4>& amplitudes() const { return amps_; }

 private:
  std::array<Complex, 4> amps_;
};

TwoQubitState bell_state(BellLabel label);
TwoQubitState apply_pauli(const TwoQubitState& q, Qubit qubit, Pauli op);

/// |<a|b>|^2
double fidelity(const TwoQubitState& a, const TwoQubitState& b);
Complex inner_product(const TwoQubitState& a, const TwoQubitState& b);

// ---------------------------------------------------------------------------
// Fock states
// ---------------------------------------------------------------------------

using Occupation = std::vector<int>;

int total_photons(const Occupation& occ);

// Mode layout of the four-mode symmetry-analyzer signal.
inline constexpr std::size_t kArm1H = 0;
inline constexpr std::size_t kArm1V = 1;
inline constexpr std::size_t kArm2H = 2;
inline constexpr std::size_t kArm2V = 3;
inline constexpr std::size_t kSignalModes = 4;

/// Sparse normalized state over occupation tuples of a fixed number of modes,
/// truncated at a maximum total photon number. Immutable once built.
class FockState {
 public:
  using AmplitudeMap = std::map<Occupation, Complex>;

  /// Merges repeated occupations, prunes amplitudes below kPruneThreshold
  /// and normalizes. Throws TruncationOverflow for occupations above the
  /// bound and std::invalid_argument for malformed or zero-norm input.
  FockState(std::size_t modes, std::span<const std::pair<Occupation, Complex>> terms,
            int max_photons = kDefaultMaxPhotons);
  FockState(std::size_t modes, std::initializer_list<std::pair<Occupation, Complex>> terms,
            int max_photons = kDefaultMaxPhotons);

  std::size_t modes() const { return modes_; }
  int max_photons() const { return max_photons_; }
  const AmplitudeMap& amplitudes() const { return amps_; }
  Complex amplitude(const Occupation& occ) const;
  double norm_squared() const;

 private:
  std::size_t modes_;
  int max_photons_;
  AmplitudeMap amps_;
};

double fidelity(const FockState& a, const FockState& b);
Complex inner_product(const FockState& a, const FockState& b);

/// Dual-rail encoding: qubit 1 occupies arm 1, qubit 2 arm 2.
FockState embed(const TwoQubitState& q);

/// Inverse of embed. Throws NotInQubitSpace if more than 1e-10 of amplitude
/// sits outside the one-photon-per-arm sector.
TwoQubitState extract(const FockState& s);

/// Creation-operator transform: a_m^dag -> sum_k U[m][k] a_k^dag.
using ModeTransform = std::vector<std::vector<Complex>>;

/// Applies a passive linear-optical network given by its creation-operator
/// transform. Output occupations above `output_max_photons` (defaults to the
/// input bound) raise TruncationOverflow.
FockState apply_linear_optics(const FockState& s, const ModeTransform& transform,
                              std::optional<int> output_max_photons = std::nullopt);

/// 50:50 beam splitter between arm 1 and arm 2 of a four-mode signal, the
/// same on both polarizations: a -> (a+b)/sqrt2, b -> (a-b)/sqrt2. Involutive.
FockState apply_beam_splitter(const FockState& s,
                              std::optional<int> output_max_photons = std::nullopt);

/// Multiplies each occupation by exp(i * phase * sum_{m in modes} n_m).
FockState apply_phase_shifter(const FockState& s, std::span<const std::size_t> modes,
                              double phase);

}  // namespace kerrbell
