#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "losq/channels.hpp"
#include "losq/error.hpp"
#include "losq/fock.hpp"
#include "losq/operator_expr.hpp"
#include "losq/report_json.hpp"
#include "losq/witness.hpp"
#include "test_support.hpp"

namespace losq {
namespace {

using testing::three_db_zeta;
constexpr double kPi = std::numbers::pi;

TwoModeProduct fig2_state() { return {coherent_state(1.0), squeezed_vacuum(three_db_zeta())}; }

// Independent oracle: <L²> − <L>² in a truncated Fock space.
double fock_variance(const StateParams& si, const StateParams& lo, double theta, int cutoff) {
  const FockState s = fock_state(si, lo, cutoff);
  const OperatorExpr l = homodyne_observable(theta);
  const double mean = expect(l, s).real();
  return expect(l * l, s).real() - mean * mean;
}

TEST(HomodyneVariance, VacuumSignalGivesShotNoise) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 50; ++t) {
    const auto lo = make_state(testing::random_params(rng));
    EXPECT_NEAR(homodyne_variance({vacuum_state(), lo}, 0.37 * t), mean_photon(lo), 1e-12);
  }
}

TEST(HomodyneVariance, MatchedSqueezersCancel) {
  const auto sq = squeezed_vacuum(three_db_zeta());
  EXPECT_NEAR(homodyne_variance({sq, sq}, kPi / 2.0), 0.0, 1e-12);
}

TEST(HomodyneVariance, CoherentSignalSqueezedLo) {
  const double zeta = three_db_zeta();
  const double expected = std::sinh(zeta) * std::sinh(zeta) + std::exp(-2.0 * zeta);
  EXPECT_NEAR(expected, 0.625299, 1e-6);
  EXPECT_NEAR(homodyne_variance(fig2_state(), 0.0), expected, 1e-12);
  EXPECT_NEAR(fock_variance({.alpha = 1.0}, {.zeta = zeta}, 0.0, 60), expected, 1e-9);
}

TEST(HomodyneVariance, MatchesFockOracleOnRandomStates) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 6; ++t) {
    const auto si = testing::random_params(rng, 1.0, 0.3, 0.3);
    const auto lo = testing::random_params(rng, 1.0, 0.3, 0.3);
    const double theta = 0.9 * t;
    const double gauss = homodyne_variance({make_state(si), make_state(lo)}, theta);
    EXPECT_NEAR(fock_variance(si, lo, theta, 48), gauss, 1e-8 * std::max(1.0, gauss));
  }
}

TEST(HomodyneVariance, PeriodicInPi) {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 20; ++t) {
    const TwoModeProduct s{make_state(testing::random_params(rng)), make_state(testing::random_params(rng))};
    EXPECT_NEAR(homodyne_variance(s, 0.2 * t), homodyne_variance(s, 0.2 * t + kPi), 1e-12);
  }
}

TEST(OrderedVariances, FalsePositivePoint) {
  const auto v = ordered_variances(fig2_state(), 0.0);
  EXPECT_NEAR(v.partial_no, 0.501187, 1e-6);
  EXPECT_NEAR(v.full_no, -0.498813, 1e-6);
  EXPECT_NEAR(v.partial_no, std::exp(-2.0 * three_db_zeta()), 1e-12);
}

TEST(OrderedVariances, QuarterTurn) {
  const auto v = ordered_variances(fig2_state(), kPi / 2.0);
  EXPECT_NEAR(v.partial_no, 1.995262, 1e-6);
  EXPECT_NEAR(v.full_no, 0.995262, 1e-6);
}

TEST(OrderedVariances, ClosedFormOverTheta) {
  const double zeta = three_db_zeta();
  for (int k = 0; k < 361; ++k) {
    const double theta = 2.0 * kPi * k / 360.0;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double expected = c * c * std::exp(-2.0 * zeta) + s * s * std::exp(2.0 * zeta);
    const auto v = ordered_variances(fig2_state(), theta);
    EXPECT_NEAR(v.partial_no, expected, 1e-12);
    EXPECT_NEAR(v.full_no, expected - 1.0, 1e-12);
  }
}

TEST(OrderedVariances, VacuumVacuum) {
  const auto v = ordered_variances({vacuum_state(), vacuum_state()}, 1.0);
  EXPECT_NEAR(v.var_L, 0.0, 1e-16);
  EXPECT_NEAR(v.partial_no, 0.0, 1e-16);
  EXPECT_NEAR(v.full_no, 0.0, 1e-16);
}

TEST(OrderedVariances, ClassicalSignalsNeverNegative) {
  // Coherent and thermal signals are classical: partial_no >= 0 for any LO.
  std::mt19937_64 rng(34);
  for (int t = 0; t < 200; ++t) {
    auto si = testing::random_params(rng);
    si.zeta = 0.0;
    const auto lo = make_state(testing::random_params(rng, 3.0, 1.5, 1.0));
    EXPECT_GE(ordered_variances({make_state(si), lo}, 0.1 * t).partial_no, -1e-12);
  }
}

TEST(OrderedVariances, LossAndNoiseLaws) {
  std::mt19937_64 rng(35);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int t = 0; t < 100; ++t) {
    const TwoModeProduct s{make_state(testing::random_params(rng)), make_state(testing::random_params(rng))};
    const double theta = 2.0 * kPi * unit(rng);
    const double eta = unit(rng);
    const double g = 1.0 + 2.0 * unit(rng);
    const double p = ordered_variances(s, theta).partial_no;
    const double nb = mean_photon(s.lo);
    EXPECT_NEAR(ordered_variances({apply_loss(s.si, LossParam(eta)), s.lo}, theta).partial_no, eta * p, 1e-12);
    EXPECT_NEAR(ordered_variances({apply_gain_noise(s.si, GainParam(g)), s.lo}, theta).partial_no,
                g * p + (g - 1.0) * (2.0 * nb + 1.0), 1e-12);
  }
}

TEST(NoiseParameter, VacuumSignalIsZeroDb) {
  EXPECT_NEAR(noise_parameter({vacuum_state(), coherent_state(2.0)}, 0.4), 0.0, 1e-12);
}

TEST(NoiseParameter, CoherentLoAtTenPhotons) {
  const double zeta = three_db_zeta();
  const TwoModeProduct s{squeezed_vacuum(zeta), coherent_state(std::sqrt(10.0))};
  const double expected = 10.0 * std::log10((std::sinh(zeta) * std::sinh(zeta) + 10.0 * std::exp(-2.0 * zeta)) / 10.0);
  EXPECT_NEAR(expected, -2.894, 2e-3);
  EXPECT_NEAR(noise_parameter(s, optimal_theta(s)), expected, 1e-10);
}

TEST(NoiseParameter, MatchedSqueezedLoIsMinusInfinity) {
  const auto sq = squeezed_vacuum(three_db_zeta());
  const double n = noise_parameter({sq, sq}, kPi / 2.0);
  EXPECT_TRUE(std::isinf(n) && n < 0.0);
}

TEST(NoiseParameter, DarkLoThrows) {
  EXPECT_THROW(noise_parameter({coherent_state(1.0), vacuum_state()}, 0.0), InvalidArgument);
}

TEST(OptimalTheta, MinimizesOverDenseGrid) {
  std::mt19937_64 rng(36);
  for (int t = 0; t < 50; ++t) {
    const TwoModeProduct s{make_state(testing::random_params(rng)), make_state(testing::random_params(rng))};
    const double best = optimal_theta(s);
    EXPECT_GE(best, 0.0);
    EXPECT_LT(best, kPi);
    const double v = homodyne_variance(s, best);
    for (int k = 0; k < 720; ++k) EXPECT_LE(v, homodyne_variance(s, kPi * k / 720.0) + 1e-12);
  }
}

TEST(OptimalTheta, SqueezedSignalCoherentLo) {
  const TwoModeProduct s{squeezed_vacuum(three_db_zeta()), coherent_state(std::sqrt(10.0))};
  EXPECT_NEAR(optimal_theta(s), 0.0, 1e-12);
}

TEST(Classify, Examples) {
  WitnessReport r;
  r.partial_no = -0.3;
  EXPECT_EQ(classify(r, 1e-9), Verdict::nonclassical_si);
  r.partial_no = 0.501187;
  r.full_no = -0.498813;
  EXPECT_EQ(classify(r, 1e-9), Verdict::classical_consistent);
  r.partial_no = 0.0;
  r.full_no = 0.0;
  EXPECT_EQ(classify(r, 1e-9), Verdict::classical_consistent);
  r.partial_no = -1e-10;
  EXPECT_EQ(classify(r, 1e-9), Verdict::classical_consistent);
  EXPECT_EQ(to_string(Verdict::nonclassical_si), "nonclassical_SI");
  EXPECT_EQ(to_string(Verdict::classical_consistent), "classical_consistent");
}

TEST(Evaluate, FalsePositiveIsFlaggedSeparately) {
  const auto r = evaluate(fig2_state(), 0.0);
  EXPECT_EQ(r.verdict, Verdict::classical_consistent);
  EXPECT_TRUE(r.standard_criterion_negative);
  EXPECT_NEAR(r.shot_noise, 0.124112, 1e-6);
  ASSERT_TRUE(r.noise_db.has_value());
  EXPECT_NEAR(*r.noise_db, 10.0 * std::log10(r.var_L / r.shot_noise), 1e-12);
}

TEST(Evaluate, SqueezedSignalIsCertified) {
  const TwoModeProduct s{squeezed_vacuum(three_db_zeta()), coherent_state(std::sqrt(10.0))};
  const auto r = evaluate(s, 0.0);
  EXPECT_NEAR(r.partial_no, -4.864, 1e-3);
  EXPECT_EQ(r.verdict, Verdict::nonclassical_si);
}

TEST(Evaluate, DarkLoHasNoNoiseParameter) {
  const auto r = evaluate({coherent_state(1.0), vacuum_state()}, 0.0);
  EXPECT_FALSE(r.noise_db.has_value());
  EXPECT_TRUE(to_json(r)["noise_db"].is_null());
}

TEST(Sweep, FluctuationFamily) {
  std::vector<double> grid;
  for (int k = 0; k < 361; ++k) grid.push_back(2.0 * kPi * k / 360.0);
  const auto reports = sweep({fig2_state()}, grid);
  ASSERT_EQ(reports.size(), 361u);
  int negative_full = 0;
  for (const auto& r : reports) {
    EXPECT_GE(r.partial_no, 0.0);
    EXPECT_EQ(r.verdict, Verdict::classical_consistent);
    if (r.full_no < 0.0) ++negative_full;
  }
  EXPECT_GT(negative_full, 0);
  EXPECT_LT(negative_full, 361);
}

TEST(Sweep, CoherentLoFamilyDecreasesTowardThreeDb) {
  const auto si = squeezed_vacuum(three_db_zeta());
  double previous = 0.0;
  for (int k = 0; k <= 60; ++k) {
    const double nb = std::pow(10.0, -2.0 + 6.0 * k / 60.0);
    const TwoModeProduct s{si, coherent_state(std::sqrt(nb))};
    const auto r = sweep({s}, {optimal_theta(s)});
    ASSERT_EQ(r.size(), 1u);
    ASSERT_TRUE(r[0].noise_db.has_value());
    if (k > 0) EXPECT_LT(*r[0].noise_db, previous);
    EXPECT_GT(*r[0].noise_db, -3.0);
    previous = *r[0].noise_db;
  }
  EXPECT_NEAR(previous, -3.0, 1e-3);
}

TEST(Sweep, OrderIsStatesOutermost) {
  const std::vector<TwoModeProduct> family{fig2_state(), {vacuum_state(), coherent_state(1.0)}};
  const auto r = sweep(family, {0.0, 1.0});
  ASSERT_EQ(r.size(), 4u);
  EXPECT_EQ(r[1].theta, 1.0);
  EXPECT_NEAR(r[2].var_L, 1.0, 1e-12);
  EXPECT_THROW(sweep(family, {}), InvalidArgument);
}

TEST(OptimizeLo, MatchedSqueezerWins) {
  const double zeta = three_db_zeta();
  LoSearchGrid grid{.zetas = {0.1, zeta, 0.6}, .phis = {0.0}, .thetas = {0.0, kPi / 4.0, kPi / 2.0}};
  const auto best = optimize_lo(squeezed_vacuum(zeta), grid);
  EXPECT_EQ(best.zeta, zeta);
  EXPECT_EQ(best.theta, kPi / 2.0);
  EXPECT_TRUE(std::isinf(best.noise_db) && best.noise_db < 0.0);
}

TEST(OptimizeLo, VacuumSignalTieBreak) {
  LoSearchGrid grid{.zetas = {0.5, 0.2, 0.0, 0.8}, .phis = {0.0, 1.0}, .thetas = {2.0, 0.5, 1.0}};
  const auto best = optimize_lo(vacuum_state(), grid);
  EXPECT_EQ(best.zeta, 0.2);  // ζ′ = 0 has no photons and is skipped
  EXPECT_EQ(best.theta, 0.5);
  EXPECT_EQ(best.phi, 0.0);
  EXPECT_NEAR(best.noise_db, 0.0, 1e-12);
}

TEST(OptimizeLo, CoherentOnlyGridUnderperforms) {
  std::vector<double> thetas;
  for (int k = 0; k < 32; ++k) thetas.push_back(kPi * k / 32.0);
  LoSearchGrid grid{.zetas = {0.0}, .phis = {0.0}, .thetas = thetas, .lo_alpha = std::sqrt(1e4)};
  const auto best = optimize_lo(squeezed_vacuum(three_db_zeta()), grid);
  EXPECT_GT(best.noise_db, -3.0);
  EXPECT_LT(best.noise_db, -2.99);
}

}  // namespace
}  // namespace losq
