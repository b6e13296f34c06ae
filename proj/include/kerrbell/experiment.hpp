#pragma once

// Experiment campaigns behind the command-line tool. Every campaign is
// deterministic for a fixed spec: trial i draws from its own random stream
// (trial_rng(seed, i)) and results are reduced in trial order.
//
// Report keys (JSON):
//   spec      the fully resolved ExperimentSpec
//   analytic  {small_angle, exact} error probabilities at (theta, alpha)
//   command-specific sections: "demo", "symmetry", "bell", "sweep", "oracle"
//   files     names of the CSV files written next to the report
//   passed    campaign-level check (within 3 sigma, oracle deviation < 1e-8)

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "kerrbell/fock.hpp"

namespace kerrbell {

enum class Command { Demo2Mode, Symmetry, Bell, Sweep, OracleCheck };

std::string_view to_string(Command c);
std::optional<Command> parse_command(std::string_view text);

struct ExperimentSpec {
  Command command = Command::Symmetry;
  double theta = 0.1;
  double alpha = 150.0;
  std::int64_t trials = 1000;
  std::uint64_t seed = 1;
  /// Bell label, "calibration", "all", or comma-separated amplitudes
  /// (real values or re,im pairs). Empty selects the command default.
  std::string input;
  bool early_exit = false;
  bool omit_final = false;
  bool ideal = false;
  std::string out;  // JSON report path; empty writes nothing
  double grid_step = 0.01;
  int sign = 1;                   // demo2mode bunched sign
  std::vector<double> k_values;   // sweep alpha*theta^2 points; empty selects defaults

  /// Throws InvalidSpec with a readable message.
  void validate() const;
  nlohmann::ordered_json to_json() const;
};

struct RunReport {
  nlohmann::ordered_json json;
  bool passed = true;
  std::vector<std::filesystem::path> files;
};

/// Parses "a,b,c" as reals or, with twice the expected count, as re,im pairs.
std::vector<Complex> parse_amplitudes(std::string_view text, std::size_t expected);

/// Runs the campaign, writes the report (and CSVs) when spec.out is set.
/// Throws InvalidSpec for bad specs and kerrbell::Error for numerical failures.
RunReport run(const ExperimentSpec& spec);

}  // namespace kerrbell
