#include "kerrbell/fock.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "kerrbell/errors.hpp"

namespace kerrbell {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kQubitLeakTolerance = 1e-10;

std::size_t index_of(Basis2 b) { return static_cast<std::size_t>(b); }

// Bit 0 of the basis index is qubit 2 (H=0, V=1), bit 1 is qubit 1.
std::size_t flip_bit(Qubit qubit) { return qubit == Qubit::One ? 2 : 1; }

double factorial(int n) { return std::tgamma(static_cast<double>(n) + 1.0); }

std::string describe(const Occupation& occ) {
  std::string s = "(";
  for (std::size_t i = 0; i < occ.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(occ[i]);
  }
  return s + ")";
}

}  // namespace

std::string_view to_string(BellLabel label) {
  switch (label) {
    case BellLabel::PsiMinus: return "PsiMinus";
    case BellLabel::PsiPlus: return "PsiPlus";
    case BellLabel::PhiMinus: return "PhiMinus";
    case BellLabel::PhiPlus: return "PhiPlus";
  }
  return "?";
}

std::optional<BellLabel> parse_bell_label(std::string_view text) {
  for (BellLabel label : kAllBellLabels) {
    if (to_string(label) == text) return label;
  }
  return std::nullopt;
}

std::string_view to_string(Pauli op) {
  switch (op) {
    case Pauli::X: return "X";
    case Pauli::Y: return "Y";
    case Pauli::Z: return "Z";
  }
  return "?";
}

// ---------------------------------------------------------------------------

TwoQubitState::TwoQubitState() : amps_{Complex{1.0}, Complex{}, Complex{}, Complex{}} {}

TwoQubitState::TwoQubitState(const std::array<Complex, 4>& amps) : amps_(amps) {
  double norm2 = 0.0;
  for (const auto& a : amps_) norm2 += std::norm(a);
  if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
    throw std::invalid_argument("TwoQubitState: amplitudes must have finite nonzero norm");
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& a : amps_) a *= scale;
}

TwoQubitState TwoQubitState::basis(Basis2 index) {
  std::array<Complex, 4> amps{};
  amps[index_of(index)] = 1.0;
  return TwoQubitState(amps);
}

TwoQubitState bell_state(BellLabel label) {
  const double h = kInvSqrt2;
  switch (label) {
    case BellLabel::PsiMinus: return TwoQubitState({0.0, h, -h, 0.0});
    case BellLabel::PsiPlus: return TwoQubitState({0.0, h, h, 0.0});
    case BellLabel::PhiMinus: return TwoQubitState({h, 0.0, 0.0, -h});
    case BellLabel::PhiPlus: return TwoQubitState({h, 0.0, 0.0, h});
  }
  throw std::invalid_argument("bell_state: unknown label");
}

TwoQubitState apply_pauli(const TwoQubitState& q, Qubit qubit, Pauli op) {
  const std::size_t bit = flip_bit(qubit);
  const auto& in = q.amplitudes();
  std::array<Complex, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) {
    const bool is_v = (i & bit) != 0;
    switch (op) {
      case Pauli::X: out[i ^ bit] = in[i]; break;
      case Pauli::Z: out[i] = is_v ? -in[i] : in[i]; break;
      // Y = iXZ: |H> -> i|V>, |V> -> -i|H>
      case Pauli::Y: out[i ^ bit] = is_v ? Complex(0, -1) * in[i] : Complex(0, 1) * in[i]; break;
    }
  }
  return TwoQubitState(out);
}

Complex inner_product(const TwoQubitState& a, const TwoQubitState& b) {
  Complex sum{};
  for (std::size_t i = 0; i < 4; ++i) sum += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
  return sum;
}

double fidelity(const TwoQubitState& a, const TwoQubitState& b) {
  return std::min(1.0, std::norm(inner_product(a, b)));
}

// ---------------------------------------------------------------------------

int total_photons(const Occupation& occ) { return std::accumulate(occ.begin(), occ.end(), 0); }

FockState::FockState(std::size_t modes, std::initializer_list<std::pair<Occupation, Complex>> terms,
                     int max_photons)
    : FockState(modes, std::span<const std::pair<Occupation, Complex>>(terms.begin(), terms.size()),
                max_photons) {}

FockState::FockState(std::size_t modes, std::span<const std::pair<Occupation, Complex>> terms,
                     int max_photons)
    : modes_(modes), max_photons_(max_photons) {
  if (modes_ == 0) throw std::invalid_argument("FockState: need at least one mode");
  if (max_photons_ < 0) throw std::invalid_argument("FockState: negative photon bound");
  for (const auto& [occ, amp] : terms) {
    if (occ.size() != modes_) {
      throw std::invalid_argument("FockState: occupation " + describe(occ) + " has wrong arity");
    }
    for (int n : occ) {
      if (n < 0) throw std::invalid_argument("FockState: negative occupation " + describe(occ));
    }
    if (total_photons(occ) > max_photons_) {
      throw TruncationOverflow("occupation " + describe(occ) + " exceeds photon bound " +
                               std::to_string(max_photons_));
    }
    amps_[occ] += amp;
  }
  double norm2 = 0.0;
  for (auto it = amps_.begin(); it != amps_.end();) {
    if (std::abs(it->second) < kPruneThreshold) {
      it = amps_.erase(it);
    } else {
      norm2 += std::norm(it->second);
      ++it;
    }
  }
  if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
    throw std::invalid_argument("FockState: amplitudes must have finite nonzero norm");
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& [occ, amp] : amps_) amp *= scale;
}

Complex FockState::amplitude(const Occupation& occ) const {
  auto it = amps_.find(occ);
  return it == amps_.end() ? Complex{} : it->second;
}

double FockState::norm_squared() const {
  double sum = 0.0;
  for (const auto& [occ, amp] : amps_) sum += std::norm(amp);
  return sum;
}

Complex inner_product(const FockState& a, const FockState& b) {
  if (a.modes() != b.modes()) throw std::invalid_argument("inner_product: mode count mismatch");
  Complex sum{};
  for (const auto& [occ, amp] : a.amplitudes()) sum += std::conj(amp) * b.amplitude(occ);
  return sum;
}

double fidelity(const FockState& a, const FockState& b) {
  return std::min(1.0, std::norm(inner_product(a, b)));
}

FockState embed(const TwoQubitState& q) {
  std::vector<std::pair<Occupation, Complex>> terms;
  for (std::size_t i = 0; i < 4; ++i) {
    Occupation occ(kSignalModes, 0);
    occ[(i & 2) ? kArm1V : kArm1H] = 1;
    occ[(i & 1) ? kArm2V : kArm2H] = 1;
    terms.emplace_back(std::move(occ), q.amplitudes()[i]);
  }
  return FockState(kSignalModes, terms);
}

TwoQubitState extract(const FockState& s) {
  if (s.modes() != kSignalModes) {
    throw std::invalid_argument("extract: expected a four-mode signal state");
  }
  std::array<Complex, 4> amps{};
  double leaked = 0.0;
  for (const auto& [occ, amp] : s.amplitudes()) {
    const bool qubit_like = occ[kArm1H] + occ[kArm1V] == 1 && occ[kArm2H] + occ[kArm2V] == 1;
    if (!qubit_like) {
      leaked = std::max(leaked, std::abs(amp));
      continue;
    }
    const std::size_t index = (occ[kArm1V] ? 2u : 0u) | (occ[kArm2V] ? 1u : 0u);
    amps[index] = amp;
  }
  if (leaked > kQubitLeakTolerance) {
    throw NotInQubitSpace("extract: amplitude " + std::to_string(leaked) +
                          " on a bunched occupation");
  }
  return TwoQubitState(amps);
}

FockState apply_linear_optics(const FockState& s, const ModeTransform& transform,
                              std::optional<int> output_max_photons) {
  const std::size_t modes = s.modes();
  if (transform.size() != modes) throw std::invalid_argument("apply_linear_optics: bad transform");
  for (const auto& row : transform) {
    if (row.size() != modes) throw std::invalid_argument("apply_linear_optics: bad transform");
  }
  const int bound = output_max_photons.value_or(s.max_photons());

  std::map<Occupation, Complex> out;
  for (const auto& [occ, amp] : s.amplitudes()) {
    // |n> = prod_m (a_m^dag)^{n_m} / sqrt(n_m!) |0>; expand the transformed
    // polynomial in the output creation operators.
    std::map<Occupation, Complex> poly{{Occupation(modes, 0), Complex{1.0}}};
    double norm = 1.0;
    for (std::size_t m = 0; m < modes; ++m) {
      norm /= std::sqrt(factorial(occ[m]));
      for (int rep = 0; rep < occ[m]; ++rep) {
        std::map<Occupation, Complex> next;
        for (const auto& [mono, coeff] : poly) {
          for (std::size_t k = 0; k < modes; ++k) {
            if (transform[m][k] == Complex{}) continue;
            Occupation raised = mono;
            ++raised[k];
            next[raised] += coeff * transform[m][k];
          }
        }
        poly = std::move(next);
      }
    }
    for (const auto& [mono, coeff] : poly) {
      double weight = norm;
      for (int e : mono) weight *= std::sqrt(factorial(e));
      out[mono] += amp * coeff * weight;
    }
  }

  std::vector<std::pair<Occupation, Complex>> terms;
  for (auto& [occ, amp] : out) {
    if (std::abs(amp) < kPruneThreshold) continue;
    if (total_photons(occ) > bound) {
      throw TruncationOverflow("linear optics produced " + describe(occ) +
                               " beyond photon bound " + std::to_string(bound));
    }
    terms.emplace_back(occ, amp);
  }
  return FockState(modes, terms, bound);
}

FockState apply_beam_splitter(const FockState& s, std::optional<int> output_max_photons) {
  if (s.modes() != kSignalModes) {
    throw std::invalid_argument("apply_beam_splitter: expected a four-mode signal state");
  }
  ModeTransform t(kSignalModes, std::vector<Complex>(kSignalModes));
  for (auto [a, b] : {std::pair{kArm1H, kArm2H}, std::pair{kArm1V, kArm2V}}) {
    t[a][a] = kInvSqrt2;
    t[a][b] = kInvSqrt2;
    t[b][a] = kInvSqrt2;
    t[b][b] = -kInvSqrt2;
  }
  return apply_linear_optics(s, t, output_max_photons);
}

FockState apply_phase_shifter(const FockState& s, std::span<const std::size_t> modes,
                              double phase) {
  std::vector<std::pair<Occupation, Complex>> terms;
  terms.reserve(s.amplitudes().size());
  for (const auto& [occ, amp] : s.amplitudes()) {
    int n = 0;
    for (std::size_t m : modes) n += occ.at(m);
    terms.emplace_back(occ, amp * std::polar(1.0, phase * n));
  }
  return FockState(s.modes(), terms, s.max_photons());
}

}  // namespace kerrbell
