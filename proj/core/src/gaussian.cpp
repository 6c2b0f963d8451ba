#include "losq/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "losq/error.hpp"

namespace losq {

namespace {

using CMat2 = Eigen::Matrix2cd;

const Mat2& symplectic_form() {
  static const Mat2 omega = (Mat2() << 0.0, 1.0, -1.0, 0.0).finished();
  return omega;
}

// Maps (x, p) to (a, a†).
const CMat2& quadrature_to_ladder() {
  static const CMat2 t = (CMat2() << cplx(1, 0), cplx(0, 1), cplx(1, 0), cplx(0, -1)).finished() /
                         std::sqrt(2.0);
  return t;
}

}  // namespace

SingleModeGaussian::SingleModeGaussian() : cov_(Mat2::Identity() * kVacuumVariance), disp_(Vec2::Zero()) {}

SingleModeGaussian::SingleModeGaussian(const Mat2& cov, const Vec2& disp) : cov_(cov), disp_(disp) {
  if (cov(0, 1) != cov(1, 0)) {
    throw InvalidArgument("covariance matrix must be symmetric");
  }
  if (!cov.allFinite() || !disp.allFinite()) {
    throw InvalidArgument("covariance and displacement must be finite");
  }
}

cplx SingleModeGaussian::amplitude() const noexcept {
  return cplx(disp_(0), disp_(1)) / std::sqrt(2.0);
}

Mat2 rotation_matrix(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return (Mat2() << c, s, -s, c).finished();
}

SingleModeGaussian make_state(const StateParams& params) {
  if (!(params.nbar >= 0.0)) {
    throw InvalidArgument("thermal photon number must be >= 0");
  }
  const Mat2 diag = Eigen::Vector2d(std::exp(-2.0 * params.zeta) / 2.0 + params.nbar,
                                    std::exp(2.0 * params.zeta) / 2.0 + params.nbar)
                        .asDiagonal();
  const Mat2 r = rotation_matrix(params.phi);
  Mat2 cov = r.transpose() * diag * r;
  cov(1, 0) = cov(0, 1);
  const Vec2 disp(std::sqrt(2.0) * params.alpha.real(), std::sqrt(2.0) * params.alpha.imag());
  return {cov, disp};
}

SingleModeGaussian vacuum_state() { return {}; }

SingleModeGaussian coherent_state(cplx alpha) { return make_state({.alpha = alpha}); }

SingleModeGaussian squeezed_vacuum(double zeta, double phi) {
  return make_state({.zeta = zeta, .phi = phi});
}

SingleModeGaussian thermal_state(double nbar) { return make_state({.nbar = nbar}); }

SingleModeGaussian rotate(const SingleModeGaussian& state, double theta) {
  const Mat2 r = rotation_matrix(theta);
  Mat2 cov = r.transpose() * state.cov() * r;
  cov(1, 0) = cov(0, 1);
  return {cov, r.transpose() * state.disp()};
}

double mean_photon(const SingleModeGaussian& state) {
  return (state.cov().trace() - 1.0 + state.disp().squaredNorm()) / 2.0;
}

FieldMoments field_moments(const SingleModeGaussian& state) {
  const CMat2& t = quadrature_to_ladder();
  const CMat2 shifted =
      state.cov().cast<cplx>() - cplx(0.0, 0.5) * symplectic_form().cast<cplx>();
  // [[<Δa†Δa>, <(Δa)²>], [<(Δa†)²>, <ΔaΔa†>]]
  const CMat2 central = t * shifted * t.adjoint();

  FieldMoments m;
  m.mean_a = state.amplitude();
  m.a_sq = central(0, 1) + m.mean_a * m.mean_a;
  m.n_a = central(0, 0).real() + std::norm(m.mean_a);
  m.aa_dag = m.n_a + 1.0;
  return m;
}

SingleModeGaussian state_from_moments(const FieldMoments& moments) {
  const cplx mean = moments.mean_a;
  const double n_central = moments.n_a - std::norm(mean);
  const cplx sq_central = moments.a_sq - mean * mean;
  CMat2 central;
  central << n_central, sq_central, std::conj(sq_central), n_central + 1.0;

  const CMat2& t = quadrature_to_ladder();
  const CMat2 shifted = t.adjoint() * central * t;
  Mat2 cov = shifted.real();
  cov(1, 0) = cov(0, 1);
  const Vec2 disp(std::sqrt(2.0) * mean.real(), std::sqrt(2.0) * mean.imag());
  return {cov, disp};
}

bool is_physical(const SingleModeGaussian& state, double tol) {
  if (!(tol >= 0.0)) {
    throw InvalidArgument("physicality tolerance must be >= 0");
  }
  const Mat2& c = state.cov();
  const double det = c.determinant();
  const Diagonalization d = diagonalize(c);
  return det >= 0.25 - tol && d.sigma_x2 > 0.0 && d.sigma_p2 > 0.0;
}

Diagonalization diagonalize(const Mat2& cov) {
  const double tr = cov.trace();
  const double diff = cov(0, 0) - cov(1, 1);
  const double off = cov(0, 1);
  const double gap = std::hypot(diff, 2.0 * off);
  const double scale = std::max({std::abs(cov(0, 0)), std::abs(cov(1, 1)), std::abs(off), 1.0});

  Diagonalization d{0.0, (tr - gap) / 2.0, (tr + gap) / 2.0};
  if (gap <= 8.0 * std::numeric_limits<double>::epsilon() * scale) {
    return d;
  }
  // C00 − C11 = −gap·cos 2φ and 2·C01 = −gap·sin 2φ.
  double phi = std::atan2(-2.0 * off, -diff) / 2.0;
  if (phi < 0.0) phi += std::numbers::pi;
  if (phi >= std::numbers::pi) phi -= std::numbers::pi;
  d.phi = phi;
  return d;
}

Mat2 reconstruct(const Diagonalization& d) {
  const Mat2 r = rotation_matrix(d.phi);
  const Mat2 diag = Eigen::Vector2d(d.sigma_x2, d.sigma_p2).asDiagonal();
  Mat2 cov = r.transpose() * diag * r;
  cov(1, 0) = cov(0, 1);
  return cov;
}

double zeta_from_db(double db) { return db * std::log(10.0) / 20.0; }

double db_from_zeta(double zeta) { return 20.0 * zeta / std::log(10.0); }

}  // namespace losq
