#pragma once

#include "losq/gaussian.hpp"

namespace losq {

/// Quantum efficiency η ∈ [0, 1]; 1 − η is the loss level.
class LossParam {
 public:
  explicit LossParam(double eta);
  double eta() const noexcept { return eta_; }

 private:
  double eta_;
};

/// Gain g >= 1 of a bath-coupled phase-insensitive amplifier.
class GainParam {
 public:
  explicit GainParam(double g);
  double g() const noexcept { return g_; }

 private:
  double g_;
};

// Beam splitter to a vacuum bath: a -> √η a + √(1−η) c.
SingleModeGaussian apply_loss(const SingleModeGaussian& state, LossParam eta);
FieldMoments apply_loss(const FieldMoments& moments, LossParam eta);

// Amplifier with vacuum bath: a -> √g a + √(g−1) c†.
SingleModeGaussian apply_gain_noise(const SingleModeGaussian& state, GainParam g);
FieldMoments apply_gain_noise(const FieldMoments& moments, GainParam g);

}  // namespace losq
