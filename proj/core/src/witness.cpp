#include "losq/witness.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <tuple>

#include "losq/error.hpp"

namespace losq {

std::string_view to_string(Verdict v) {
  return v == Verdict::nonclassical_si ? "nonclassical_SI" : "classical_consistent";
}

double homodyne_variance(const TwoModeProduct& state, double theta) {
  const Mat2 r = rotation_matrix(theta);
  const Mat2& c = state.si.cov();
  const Mat2& c_lo = state.lo.cov();
  const Vec2& xi = state.si.disp();
  const Vec2& xi_lo = state.lo.disp();

  const Mat2 lo_rotated = r.transpose() * c_lo * r;
  const Mat2 si_rotated = r * c * r.transpose();
  return (c * lo_rotated).trace() - 0.5 + xi.dot(lo_rotated * xi) + xi_lo.dot(si_rotated * xi_lo);
}

OrderedVariances ordered_variances(const TwoModeProduct& state, double theta) {
  const double var = homodyne_variance(state, theta);
  const double partial = var - mean_photon(state.lo);
  return {var, partial, partial - mean_photon(state.si)};
}

namespace {

double shot_noise_reference(const TwoModeProduct& state) {
  const double nb = mean_photon(state.lo);
  if (!(nb > kZeroVarianceThreshold)) {
    throw InvalidArgument("noise parameter undefined: LO has zero mean photon number");
  }
  return nb;
}

double noise_db_from(double var, double shot_noise) {
  if (var <= kZeroVarianceThreshold) {
    return -std::numeric_limits<double>::infinity();
  }
  return 10.0 * std::log10(var / shot_noise);
}

}  // namespace

double noise_parameter(const TwoModeProduct& state, double theta) {
  const double nb = shot_noise_reference(state);
  return noise_db_from(homodyne_variance(state, theta), nb);
}

double optimal_theta(const TwoModeProduct& state) {
  const double v0 = homodyne_variance(state, 0.0);
  const double v90 = homodyne_variance(state, std::numbers::pi / 2.0);
  const double v45 = homodyne_variance(state, std::numbers::pi / 4.0);
  const double c0 = (v0 + v90) / 2.0;
  const double c1 = (v0 - v90) / 2.0;
  const double c2 = v45 - c0;
  if (c1 == 0.0 && c2 == 0.0) {
    return 0.0;
  }
  double theta = std::atan2(-c2, -c1) / 2.0;
  if (theta < 0.0) theta += std::numbers::pi;
  if (theta >= std::numbers::pi) theta -= std::numbers::pi;
  return theta;
}

Verdict classify(const WitnessReport& report, double tol) {
  if (!(tol >= 0.0)) {
    throw InvalidArgument("verdict tolerance must be >= 0");
  }
  return report.partial_no < -tol ? Verdict::nonclassical_si : Verdict::classical_consistent;
}

WitnessReport evaluate(const TwoModeProduct& state, double theta, double tol) {
  const OrderedVariances v = ordered_variances(state, theta);
  WitnessReport r;
  r.theta = theta;
  r.var_L = v.var_L;
  r.partial_no = v.partial_no;
  r.full_no = v.full_no;
  r.shot_noise = mean_photon(state.lo);
  if (r.shot_noise > kZeroVarianceThreshold) {
    r.noise_db = noise_db_from(v.var_L, r.shot_noise);
  }
  r.verdict = classify(r, tol);
  r.standard_criterion_negative = v.full_no < -tol;
  return r;
}

std::vector<WitnessReport> sweep(const std::vector<TwoModeProduct>& family,
                                 const std::vector<double>& theta_grid, double tol) {
  if (theta_grid.empty()) {
    throw InvalidArgument("sweep needs a nonempty phase grid");
  }
  std::vector<WitnessReport> out;
  out.reserve(family.size() * theta_grid.size());
  for (const auto& state : family) {
    for (double theta : theta_grid) {
      out.push_back(evaluate(state, theta, tol));
    }
  }
  return out;
}

LoOptimum optimize_lo(const SingleModeGaussian& si, const LoSearchGrid& grid) {
  if (grid.zetas.empty() || grid.phis.empty() || grid.thetas.empty()) {
    throw InvalidArgument("LO search grid must be nonempty in every axis");
  }
  constexpr double kTie = 1e-12;
  std::optional<LoOptimum> best;
  const auto before = [](const LoOptimum& x, const LoOptimum& y) {
    return std::tie(x.zeta, x.theta, x.phi) < std::tie(y.zeta, y.theta, y.phi);
  };

  for (double zeta : grid.zetas) {
    for (double phi : grid.phis) {
      const TwoModeProduct state{si, make_state({.zeta = zeta, .phi = phi, .alpha = grid.lo_alpha})};
      if (!(mean_photon(state.lo) > kZeroVarianceThreshold)) {
        continue;
      }
      for (double theta : grid.thetas) {
        const LoOptimum candidate{zeta, phi, theta, noise_parameter(state, theta)};
        if (!best) {
          best = candidate;
          continue;
        }
        const double a = candidate.noise_db;
        const double b = best->noise_db;
        const bool tie = a == b || std::abs(a - b) <= kTie;
        if ((!tie && a < b) || (tie && before(candidate, *best))) {
          best = candidate;
        }
      }
    }
  }
  if (!best) {
    throw InvalidArgument("no LO grid point has a nonzero shot-noise reference");
  }
  return *best;
}

}  // namespace losq
