#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "losq/gaussian.hpp"

namespace losq {

/// Uncorrelated signal (mode A) and local oscillator (mode B).
struct TwoModeProduct {
  SingleModeGaussian si;
  SingleModeGaussian lo;
};

enum class Verdict { nonclassical_si, classical_consistent };

std::string_view to_string(Verdict v);

inline constexpr double kDefaultVerdictTolerance = 1e-9;
/// var_L at or below this is reported as N = −∞.
inline constexpr double kZeroVarianceThreshold = 1e-15;

struct OrderedVariances {
  double var_L;       ///< <(ΔL)²>
  double partial_no;  ///< <:A:(ΔL)²:A:> = var_L − <b†b>
  double full_no;     ///< <:(ΔL)²:> = var_L − <a†a> − <b†b>
};

struct WitnessReport {
  double theta = 0.0;
  double var_L = 0.0;
  double partial_no = 0.0;
  double full_no = 0.0;
  double shot_noise = 0.0;  ///< <b†b>
  /// Noise parameter in dB; −∞ when var_L vanishes, empty when the shot
  /// noise reference is zero.
  std::optional<double> noise_db;
  Verdict verdict = Verdict::classical_consistent;
  /// full_no < −tol: the coherent-LO criterion fires. Never drives the verdict.
  bool standard_criterion_negative = false;
};

/// <(ΔL)²> for L = e^{iθ} a†b + e^{−iθ} a b†:
///   tr(C R_θᵀ C' R_θ) − 1/2 + ξᵀ R_θᵀ C' R_θ ξ + ξ'ᵀ R_θ C R_θᵀ ξ'.
double homodyne_variance(const TwoModeProduct& state, double theta);

OrderedVariances ordered_variances(const TwoModeProduct& state, double theta);

/// 10·log10(var_L / <b†b>), or −∞ when var_L <= kZeroVarianceThreshold.
/// Throws InvalidArgument when the LO carries no photons.
double noise_parameter(const TwoModeProduct& state, double theta);

/// var_L(θ) = c0 + c1·cos 2θ + c2·sin 2θ; returns the minimizing θ in [0, π).
double optimal_theta(const TwoModeProduct& state);

Verdict classify(const WitnessReport& report, double tol = kDefaultVerdictTolerance);

WitnessReport evaluate(const TwoModeProduct& state, double theta,
                       double tol = kDefaultVerdictTolerance);

/// One report per (state, θ), states outermost.
std::vector<WitnessReport> sweep(const std::vector<TwoModeProduct>& family,
                                 const std::vector<double>& theta_grid,
                                 double tol = kDefaultVerdictTolerance);

/// Grid over squeezed (optionally displaced) LO states and homodyne phases.
struct LoSearchGrid {
  std::vector<double> zetas;
  std::vector<double> phis{0.0};
  std::vector<double> thetas;
  cplx lo_alpha{0.0, 0.0};
};

struct LoOptimum {
  double zeta = 0.0;
  double phi = 0.0;
  double theta = 0.0;
  double noise_db = 0.0;
};

/// Exhaustive grid search for the LO minimizing the noise parameter. Ties go
/// to the smallest ζ′, then θ, then φ′. Points whose LO has no photons are
/// skipped.
LoOptimum optimize_lo(const SingleModeGaussian& si, const LoSearchGrid& grid);

}  // namespace losq
