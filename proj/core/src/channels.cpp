#include "losq/channels.hpp"

#include <cmath>

#include "losq/error.hpp"

namespace losq {

LossParam::LossParam(double eta) : eta_(eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw InvalidArgument("quantum efficiency must lie in [0, 1]");
  }
}

GainParam::GainParam(double g) : g_(g) {
  if (!(g >= 1.0) || !std::isfinite(g)) {
    throw InvalidArgument("amplifier gain must be >= 1");
  }
}

SingleModeGaussian apply_loss(const SingleModeGaussian& state, LossParam loss) {
  const double eta = loss.eta();
  Mat2 cov = eta * state.cov() + (1.0 - eta) * kVacuumVariance * Mat2::Identity();
  cov(1, 0) = cov(0, 1);
  return {cov, std::sqrt(eta) * state.disp()};
}

FieldMoments apply_loss(const FieldMoments& m, LossParam loss) {
  const double eta = loss.eta();
  FieldMoments out;
  out.mean_a = std::sqrt(eta) * m.mean_a;
  out.a_sq = eta * m.a_sq;
  out.n_a = eta * m.n_a;
  out.aa_dag = out.n_a + 1.0;
  return out;
}

SingleModeGaussian apply_gain_noise(const SingleModeGaussian& state, GainParam gain) {
  const double g = gain.g();
  Mat2 cov = g * state.cov() + (g - 1.0) * kVacuumVariance * Mat2::Identity();
  cov(1, 0) = cov(0, 1);
  return {cov, std::sqrt(g) * state.disp()};
}

FieldMoments apply_gain_noise(const FieldMoments& m, GainParam gain) {
  const double g = gain.g();
  FieldMoments out;
  out.mean_a = std::sqrt(g) * m.mean_a;
  out.a_sq = g * m.a_sq;
  out.n_a = g * m.n_a + g - 1.0;
  out.aa_dag = out.n_a + 1.0;
  return out;
}

}  // namespace losq
