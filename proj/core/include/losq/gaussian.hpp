#pragma once

#include <complex>

#include <Eigen/Dense>

namespace losq {

using Mat2 = Eigen::Matrix2d;
using Vec2 = Eigen::Vector2d;
using cplx = std::complex<double>;

/// Quadrature covariance of the vacuum, in units where [x, p] = i.
inline constexpr double kVacuumVariance = 0.5;

/// Single-mode Gaussian state in quadrature form.
///
/// `cov` holds the symmetrized second central moments of (x, p) with the
/// vacuum at (1/2)·I, `disp` holds (<x>, <p>). Physicality is not enforced on
/// construction; use is_physical().
class SingleModeGaussian {
 public:
  SingleModeGaussian();  // vacuum
  SingleModeGaussian(const Mat2& cov, const Vec2& disp);

  const Mat2& cov() const noexcept { return cov_; }
  const Vec2& disp() const noexcept { return disp_; }

  /// Complex amplitude <a> = (ξ_x + i ξ_p)/√2.
  cplx amplitude() const noexcept;

 private:
  Mat2 cov_;
  Vec2 disp_;
};

/// Displaced, rotated, squeezed thermal state parameters.
struct StateParams {
  double zeta = 0.0;  ///< squeezing; zeta > 0 squeezes x at phi = 0
  double nbar = 0.0;  ///< thermal background photons, >= 0
  double phi = 0.0;   ///< orientation of the squeezing ellipse
  cplx alpha{0.0, 0.0};
};

/// First and second moments of the annihilation operator.
struct FieldMoments {
  cplx mean_a;   ///< <a>
  cplx a_sq;     ///< <a^2>
  double n_a;    ///< <a† a>
  double aa_dag; ///< <a a†> = n_a + 1
};

struct Diagonalization {
  double phi;       ///< in [0, π)
  double sigma_x2;  ///< smaller variance
  double sigma_p2;  ///< larger variance
};

/// R_θ = [[cos θ, sin θ], [−sin θ, cos θ]].
Mat2 rotation_matrix(double theta);

SingleModeGaussian make_state(const StateParams& params);

SingleModeGaussian vacuum_state();
SingleModeGaussian coherent_state(cplx alpha);
SingleModeGaussian squeezed_vacuum(double zeta, double phi = 0.0);
SingleModeGaussian thermal_state(double nbar);

/// cov' = R_θᵀ cov R_θ, disp' = R_θᵀ disp; the phase shift exp(iθ a†a).
SingleModeGaussian rotate(const SingleModeGaussian& state, double theta);

/// <a† a> = (tr C − 1 + ξᵀξ)/2.
double mean_photon(const SingleModeGaussian& state);

FieldMoments field_moments(const SingleModeGaussian& state);

/// Inverse of field_moments: rebuilds (C, ξ) from the ladder moments.
SingleModeGaussian state_from_moments(const FieldMoments& moments);

/// det(C) >= 1/4 − tol and C positive definite.
bool is_physical(const SingleModeGaussian& state, double tol = 0.0);

/// C = R_φᵀ diag(σ_x², σ_p²) R_φ with σ_x² <= σ_p²; φ = 0 for a degenerate spectrum.
Diagonalization diagonalize(const Mat2& cov);

/// R_φᵀ diag(σ_x², σ_p²) R_φ.
Mat2 reconstruct(const Diagonalization& d);

/// Squeezing in dB (10·log10 e^{2ζ}) to ζ; 3 dB maps to ζ ≈ 0.345388.
double zeta_from_db(double db);
double db_from_zeta(double zeta);

}  // namespace losq
