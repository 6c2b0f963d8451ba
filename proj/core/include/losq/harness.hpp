#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "losq/witness.hpp"

namespace losq {

/// Process exit status of the command-line tool.
enum class ExitCode : int { success = 0, validation_failure = 1, input_error = 2 };

// ---------------------------------------------------------------- reproduce

/// Signal and LO of the fluctuation figure: coherent signal with one photon,
/// 3 dB squeezed-vacuum LO.
TwoModeProduct fluctuation_scenario();

struct FluctuationRow {
  double theta_rad;
  double partial_no;
  double full_no;
};

/// `points` phases evenly spaced over [0, 2π], both ends included.
std::vector<FluctuationRow> fluctuation_curve(int points);

struct NoiseSweepRow {
  double lo_mean_photon;
  double noise_db_coherent;  ///< coherent LO, optimal phase
  double noise_db_squeezed;  ///< squeezed-vacuum LO, optimal phase
  double theta_coherent;
  double theta_squeezed;
};

/// 3 dB squeezed signal against coherent and squeezed-vacuum LOs of equal
/// mean photon number, log-spaced over [1e-2, 1e4]; the matched squeezed LO
/// (ζ′ = ζ) is always included.
std::vector<NoiseSweepRow> noise_sweep_curve(int points);

struct RobustnessRow {
  std::string channel;  ///< "loss" or "gain"
  double parameter;     ///< η or g
  double partial_no;
  double predicted;     ///< η·p or g·p + (g−1)(<bb†> + <b†b>)
};

/// Loss and amplifier noise on the 3 dB squeezed signal measured against a
/// coherent LO with <b†b> = 10 at θ = 0.
std::vector<RobustnessRow> robustness_curve(int points);

struct ReproduceConfig {
  std::string figure;  ///< fluctuations | noise-sweep | robustness
  std::filesystem::path out_dir;
  bool svg = false;
  int points = 0;      ///< 0 selects the figure's default
  double db_floor = -60.0;
};

struct ReproduceResult {
  std::vector<std::filesystem::path> files;
  nlohmann::json summary;
};

ReproduceResult cmd_reproduce(const ReproduceConfig& config);

// ------------------------------------------------------------------ witness

struct WitnessResult {
  nlohmann::json report;
  std::vector<std::string> warnings;
};

WitnessResult cmd_witness(std::istream& csv, double tol = kDefaultVerdictTolerance);

// ----------------------------------------------------------------- validate

struct SuiteResult {
  std::string name;
  bool passed = true;
  int trials = 0;
  double max_deviation = 0.0;
  double threshold = 0.0;
  std::vector<std::string> failures;
};

struct ValidateConfig {
  int trials = 200;
  std::uint64_t seed = 42;
  int cutoff_max = 128;
};

struct ValidationReport {
  std::vector<SuiteResult> suites;
  std::vector<std::string> warnings;
  bool passed() const;
  nlohmann::json to_json() const;
};

/// Gaussian closed forms vs the Fock oracle on random displaced squeezed
/// thermal products; relative deviation with a unit floor.
SuiteResult validate_gaussian_fock(int trials, std::uint64_t seed, int cutoff_max);
/// <:A: f†f :A:> >= −1e-8 for coherent signals and Haar-random LO vectors.
SuiteResult validate_classicality(int trials, std::uint64_t seed);
/// Loss and noise scaling of the partially ordered variance, to 1e-12.
SuiteResult validate_channel_laws(int trials, std::uint64_t seed);
/// apply_loss moments vs a beam splitter to a vacuum ancilla traced out.
SuiteResult validate_loss_oracle(int trials, std::uint64_t seed);
/// reorder() preserves truncated matrices on the interior block.
SuiteResult validate_reorder(int trials, std::uint64_t seed);

ValidationReport cmd_validate(const ValidateConfig& config);

}  // namespace losq
