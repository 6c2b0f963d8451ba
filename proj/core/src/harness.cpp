#include "losq/harness.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "losq/channels.hpp"
#include "losq/error.hpp"
#include "losq/fock.hpp"
#include "losq/moments_csv.hpp"
#include "losq/operator_expr.hpp"
#include "losq/report_json.hpp"
#include "losq/svg_plot.hpp"

namespace losq {

namespace {

constexpr double kFigureSqueezeDb = 3.0;
constexpr double kRobustnessLoPhotons = 10.0;

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path.string());
  out << content;
  if (!out) throw InputError("failed writing " + path.string());
}

std::string csv_cell(double v) { return format_double(v); }

// ----------------------------------------------------------------- figures

ReproduceResult reproduce_fluctuations(const ReproduceConfig& cfg) {
  const int points = cfg.points > 0 ? cfg.points : 361;
  const auto rows = fluctuation_curve(points);

  std::string csv = "theta_rad,partial_no,full_no\n";
  double min_partial = std::numeric_limits<double>::infinity();
  double min_full = min_partial;
  double theta_min_full = 0.0;
  int negative_full = 0;
  for (const auto& r : rows) {
    csv += csv_cell(r.theta_rad) + ',' + csv_cell(r.partial_no) + ',' + csv_cell(r.full_no) + '\n';
    min_partial = std::min(min_partial, r.partial_no);
    if (r.full_no < min_full) {
      min_full = r.full_no;
      theta_min_full = r.theta_rad;
    }
    if (r.full_no < -kDefaultVerdictTolerance) ++negative_full;
  }

  ReproduceResult res;
  res.summary = {
      {"figure", "fluctuations"},
      {"points", points},
      {"si", {{"kind", "coherent"}, {"alpha", 1.0}}},
      {"lo", {{"kind", "squeezed_vacuum"}, {"squeeze_db", kFigureSqueezeDb}, {"zeta", zeta_from_db(kFigureSqueezeDb)}}},
      {"min_partial_no", number_to_json(min_partial)},
      {"min_full_no", number_to_json(min_full)},
      {"theta_at_min_full_no", theta_min_full},
      {"full_no_negative_points", negative_full},
      {"standard_criterion_false_positive", negative_full > 0},
      {"partial_criterion_negative", min_partial < -kDefaultVerdictTolerance},
  };

  const auto base = cfg.out_dir / "fluctuations";
  write_file(base.string() + ".csv", csv);
  res.files.push_back(base.string() + ".csv");
  write_file(base.string() + ".json", res.summary.dump(2) + "\n");
  res.files.push_back(base.string() + ".json");

  if (cfg.svg) {
    PlotSpec spec{.title = "Normally ordered fluctuations, coherent SI / squeezed LO",
                  .x_label = "theta (rad)",
                  .y_label = "ordered variance",
                  .y_floor = cfg.db_floor};
    PlotSeries partial{.label = "partial (A) order"};
    PlotSeries full{.label = "full order", .dashed = true};
    for (const auto& r : rows) {
      partial.x.push_back(r.theta_rad);
      partial.y.push_back(r.partial_no);
      full.x.push_back(r.theta_rad);
      full.y.push_back(r.full_no);
    }
    spec.series = {partial, full};
    write_file(base.string() + ".svg", render_svg(spec));
    res.files.push_back(base.string() + ".svg");
  }
  return res;
}

ReproduceResult reproduce_noise_sweep(const ReproduceConfig& cfg) {
  const int points = cfg.points > 0 ? cfg.points : 121;
  const auto rows = noise_sweep_curve(points);

  std::string csv = "lo_mean_photon,noise_db_coherent,noise_db_squeezed,theta_coherent,theta_squeezed\n";
  bool decreasing = true;
  double best_sq = std::numeric_limits<double>::infinity();
  double best_sq_photons = 0.0;
  double coherent_at_10 = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& r = rows[k];
    csv += csv_cell(r.lo_mean_photon) + ',' + csv_cell(r.noise_db_coherent) + ',' +
           csv_cell(r.noise_db_squeezed) + ',' + csv_cell(r.theta_coherent) + ',' +
           csv_cell(r.theta_squeezed) + '\n';
    if (k > 0 && !(r.noise_db_coherent < rows[k - 1].noise_db_coherent)) decreasing = false;
    if (r.noise_db_squeezed < best_sq) {
      best_sq = r.noise_db_squeezed;
      best_sq_photons = r.lo_mean_photon;
    }
    if (std::abs(r.lo_mean_photon - 10.0) < 1e-9) coherent_at_10 = r.noise_db_coherent;
  }

  ReproduceResult res;
  res.summary = {
      {"figure", "noise-sweep"},
      {"points", rows.size()},
      {"si", {{"kind", "squeezed_vacuum"}, {"squeeze_db", kFigureSqueezeDb}, {"zeta", zeta_from_db(kFigureSqueezeDb)}}},
      {"coherent_lo",
       {{"noise_db_first", number_to_json(rows.front().noise_db_coherent)},
        {"noise_db_last", number_to_json(rows.back().noise_db_coherent)},
        {"noise_db_at_10", number_to_json(coherent_at_10)},
        {"strictly_decreasing", decreasing}}},
      {"squeezed_lo",
       {{"best_noise_db", number_to_json(best_sq)}, {"best_lo_mean_photon", best_sq_photons}}},
      {"clamp_floor_db", cfg.db_floor},
  };

  const auto base = cfg.out_dir / "noise_sweep";
  write_file(base.string() + ".csv", csv);
  res.files.push_back(base.string() + ".csv");
  write_file(base.string() + ".json", res.summary.dump(2) + "\n");
  res.files.push_back(base.string() + ".json");

  if (cfg.svg) {
    PlotSpec spec{.title = "Noise parameter vs LO intensity, 3 dB squeezed SI",
                  .x_label = "LO mean photon number",
                  .y_label = "N (dB)",
                  .log_x = true,
                  .y_floor = cfg.db_floor};
    PlotSeries squeezed{.label = "squeezed-vacuum LO"};
    PlotSeries coherent{.label = "coherent LO", .dashed = true};
    for (const auto& r : rows) {
      squeezed.x.push_back(r.lo_mean_photon);
      squeezed.y.push_back(r.noise_db_squeezed);
      coherent.x.push_back(r.lo_mean_photon);
      coherent.y.push_back(r.noise_db_coherent);
    }
    spec.series = {squeezed, coherent};
    write_file(base.string() + ".svg", render_svg(spec));
    res.files.push_back(base.string() + ".svg");
  }
  return res;
}

ReproduceResult reproduce_robustness(const ReproduceConfig& cfg) {
  const int points = cfg.points > 0 ? cfg.points : 21;
  const auto rows = robustness_curve(points);

  std::string csv = "channel,parameter,partial_no,predicted\n";
  double max_dev = 0.0;
  for (const auto& r : rows) {
    csv += r.channel + ',' + csv_cell(r.parameter) + ',' + csv_cell(r.partial_no) + ',' +
           csv_cell(r.predicted) + '\n';
    max_dev = std::max(max_dev, std::abs(r.partial_no - r.predicted));
  }
  const TwoModeProduct ideal{squeezed_vacuum(zeta_from_db(kFigureSqueezeDb)),
                             coherent_state(std::sqrt(kRobustnessLoPhotons))};
  const double nb = mean_photon(ideal.lo);

  ReproduceResult res;
  res.summary = {
      {"figure", "robustness"},
      {"points", points},
      {"ideal_partial_no", ordered_variances(ideal, 0.0).partial_no},
      {"loss_slope", ordered_variances(ideal, 0.0).partial_no},
      {"gain_offset_per_unit", 2.0 * nb + 1.0},
      {"max_deviation_from_scaling_laws", max_dev},
  };

  const auto base = cfg.out_dir / "robustness";
  write_file(base.string() + ".csv", csv);
  res.files.push_back(base.string() + ".csv");
  write_file(base.string() + ".json", res.summary.dump(2) + "\n");
  res.files.push_back(base.string() + ".json");

  if (cfg.svg) {
    PlotSpec spec{.title = "Partially ordered variance under loss (eta) and gain (g)",
                  .x_label = "eta or g",
                  .y_label = "partial NO variance",
                  .y_floor = -std::numeric_limits<double>::infinity()};
    PlotSeries loss{.label = "loss vs eta"};
    PlotSeries gain{.label = "gain vs g", .dashed = true};
    for (const auto& r : rows) {
      auto& s = r.channel == "loss" ? loss : gain;
      s.x.push_back(r.parameter);
      s.y.push_back(r.partial_no);
    }
    spec.series = {loss, gain};
    write_file(base.string() + ".svg", render_svg(spec));
    res.files.push_back(base.string() + ".svg");
  }
  return res;
}

// --------------------------------------------------------------- validation

StateParams random_gaussian_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  StateParams p;
  const double radius = 2.0 * unit(rng);
  const double angle = 2.0 * std::numbers::pi * unit(rng);
  p.alpha = std::polar(radius, angle);
  p.zeta = -0.5 + unit(rng);
  p.nbar = unit(rng) < 0.5 ? 0.0 : unit(rng);
  p.phi = 2.0 * std::numbers::pi * unit(rng);
  return p;
}

OperatorExpr random_expression(std::mt19937_64& rng, int max_degree, int max_terms) {
  std::uniform_int_distribution<int> n_terms(1, max_terms);
  std::uniform_int_distribution<int> length(0, max_degree);
  std::uniform_int_distribution<int> letter(0, 3);
  std::normal_distribution<double> normal(0.0, 1.0);
  OperatorExpr e;
  const int terms = n_terms(rng);
  for (int t = 0; t < terms; ++t) {
    Word w(length(rng));
    for (auto& l : w) l = static_cast<Letter>(letter(rng));
    const double re = normal(rng);
    const double im = normal(rng);
    e.add_term(w, cplx(re, im));
  }
  return e;
}

double relative_deviation(double value, double reference) {
  return std::abs(value - reference) / std::max(1.0, std::abs(reference));
}

void record(SuiteResult& s, double deviation, const std::string& context) {
  s.max_deviation = std::max(s.max_deviation, deviation);
  if (!(deviation <= s.threshold)) {
    s.passed = false;
    if (s.failures.size() < 10) s.failures.push_back(context);
  }
}

}  // namespace

// ------------------------------------------------------------------ figures

TwoModeProduct fluctuation_scenario() {
  return {coherent_state(1.0), squeezed_vacuum(zeta_from_db(kFigureSqueezeDb))};
}

std::vector<FluctuationRow> fluctuation_curve(int points) {
  if (points < 2) throw InputError("fluctuation curve needs at least 2 points");
  const TwoModeProduct state = fluctuation_scenario();
  std::vector<FluctuationRow> rows;
  rows.reserve(points);
  for (int k = 0; k < points; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / (points - 1);
    const OrderedVariances v = ordered_variances(state, theta);
    rows.push_back({theta, v.partial_no, v.full_no});
  }
  return rows;
}

std::vector<NoiseSweepRow> noise_sweep_curve(int points) {
  if (points < 2) throw InputError("noise sweep needs at least 2 points");
  const double zeta = zeta_from_db(kFigureSqueezeDb);
  const SingleModeGaussian si = squeezed_vacuum(zeta);

  std::vector<double> photons;
  for (int k = 0; k < points; ++k) photons.push_back(std::pow(10.0, -2.0 + 6.0 * k / (points - 1)));
  const double matched = std::sinh(zeta) * std::sinh(zeta);
  if (std::find(photons.begin(), photons.end(), matched) == photons.end()) {
    photons.insert(std::upper_bound(photons.begin(), photons.end(), matched), matched);
  }

  std::vector<NoiseSweepRow> rows;
  rows.reserve(photons.size());
  for (double n : photons) {
    const TwoModeProduct coherent{si, coherent_state(std::sqrt(n))};
    // sinh²ζ′ = n, with the exact ζ′ = ζ at the matched point.
    const double zeta_lo = n == matched ? zeta : std::asinh(std::sqrt(n));
    const TwoModeProduct squeezed{si, squeezed_vacuum(zeta_lo)};
    const double th_c = optimal_theta(coherent);
    const double th_s = optimal_theta(squeezed);
    rows.push_back({n, noise_parameter(coherent, th_c), noise_parameter(squeezed, th_s), th_c, th_s});
  }
  return rows;
}

std::vector<RobustnessRow> robustness_curve(int points) {
  if (points < 2) throw InputError("robustness curve needs at least 2 points");
  const TwoModeProduct ideal{squeezed_vacuum(zeta_from_db(kFigureSqueezeDb)),
                             coherent_state(std::sqrt(kRobustnessLoPhotons))};
  const double theta = 0.0;
  const double p0 = ordered_variances(ideal, theta).partial_no;
  const double nb = mean_photon(ideal.lo);

  std::vector<RobustnessRow> rows;
  for (int k = 0; k < points; ++k) {
    const double eta = static_cast<double>(k) / (points - 1);
    const TwoModeProduct lossy{apply_loss(ideal.si, LossParam(eta)), ideal.lo};
    rows.push_back({"loss", eta, ordered_variances(lossy, theta).partial_no, eta * p0});
  }
  for (int k = 0; k < points; ++k) {
    const double g = 1.0 + 2.0 * k / (points - 1);
    const TwoModeProduct noisy{apply_gain_noise(ideal.si, GainParam(g)), ideal.lo};
    rows.push_back({"gain", g, ordered_variances(noisy, theta).partial_no,
                    g * p0 + (g - 1.0) * (2.0 * nb + 1.0)});
  }
  return rows;
}

ReproduceResult cmd_reproduce(const ReproduceConfig& config) {
  std::error_code ec;
  std::filesystem::create_directories(config.out_dir, ec);
  if (ec || !std::filesystem::is_directory(config.out_dir)) {
    throw InputError("cannot create output directory " + config.out_dir.string());
  }
  if (config.figure == "fluctuations") return reproduce_fluctuations(config);
  if (config.figure == "noise-sweep") return reproduce_noise_sweep(config);
  if (config.figure == "robustness") return reproduce_robustness(config);
  throw InputError("unknown figure '" + config.figure + "' (fluctuations, noise-sweep, robustness)");
}

// ------------------------------------------------------------------ witness

WitnessResult cmd_witness(std::istream& csv, double tol) {
  if (!(tol >= 0.0)) throw InputError("tolerance must be >= 0");
  const MomentTable table = read_moment_csv(csv);

  WitnessResult result;
  result.warnings = table.warnings;
  nlohmann::json rows = nlohmann::json::array();
  int nonclassical = 0;
  int standard_negative = 0;
  for (const auto& m : table.rows) {
    WitnessReport r;
    r.theta = m.theta_rad;
    r.var_L = m.var_L;
    r.shot_noise = m.nb;
    r.partial_no = m.var_L - m.nb;
    r.noise_db = m.var_L <= kZeroVarianceThreshold ? -std::numeric_limits<double>::infinity()
                                                    : 10.0 * std::log10(m.var_L / m.nb);
    r.verdict = classify(r, tol);

    nlohmann::json row = {
        {"line", m.line},
        {"theta_rad", m.theta_rad},
        {"var_L", m.var_L},
        {"nb", m.nb},
        {"partial_no", r.partial_no},
        {"noise_db", db_to_json(r.noise_db)},
        {"verdict", std::string(to_string(r.verdict))},
    };
    if (m.na) {
      const double full = r.partial_no - *m.na;
      row["na"] = *m.na;
      row["full_no"] = full;
      row["standard_criterion_negative"] = full < -tol;
      if (full < -tol) ++standard_negative;
    }
    if (r.verdict == Verdict::nonclassical_si) ++nonclassical;
    rows.push_back(std::move(row));
  }
  const int total = static_cast<int>(table.rows.size());
  result.report = {
      {"tolerance", tol},
      {"rows", std::move(rows)},
      {"summary",
       {{"rows", total},
        {"nonclassical_SI", nonclassical},
        {"classical_consistent", total - nonclassical},
        {"standard_criterion_negative", standard_negative}}},
      {"warnings", result.warnings},
  };
  return result;
}

// ----------------------------------------------------------------- validate

constexpr double kConvergenceRelTol = 1e-7;

SuiteResult validate_gaussian_fock(int trials, std::uint64_t seed, int cutoff_max) {
  SuiteResult s{.name = "gaussian_fock_agreement", .trials = trials, .threshold = 1e-6};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

  for (int t = 0; t < trials; ++t) {
    const StateParams si = random_gaussian_params(rng);
    const StateParams lo = random_gaussian_params(rng);
    const double theta = angle(rng);
    const TwoModeProduct gauss{make_state(si), make_state(lo)};
    const OrderedVariances expected = ordered_variances(gauss, theta);

    const OperatorExpr l = homodyne_observable(theta);
    const OperatorExpr l2 = l * l;
    // <L> = 2 Re(e^{iθ} <a>* <b>); the convergence tolerance is relative to <L²>
    const double mean_l_gauss =
        2.0 * (std::polar(1.0, theta) * std::conj(gauss.si.amplitude()) * gauss.lo.amplitude()).real();
    const double tol = kConvergenceRelTol * std::max(1.0, expected.var_L + mean_l_gauss * mean_l_gauss);
    try {
      const ConvergedValue conv = converge_expectation(si, lo, l2, tol, cutoff_max);
      const FockState state = fock_state(si, lo, conv.cutoff);
      const double mean_l = expect(l, state).real();
      const double var = expect(l2, state).real() - mean_l * mean_l;
      const double partial = expect(formal_normal_order(l2, {Mode::A}), state).real() - mean_l * mean_l;
      const double full = expect(formal_normal_order(l2, ModeSet::all()), state).real() - mean_l * mean_l;
      const double dev = std::max({relative_deviation(var, expected.var_L),
                                   relative_deviation(partial, expected.partial_no),
                                   relative_deviation(full, expected.full_no)});
      record(s, dev, "trial " + std::to_string(t) + ": deviation " + format_double(dev) +
                         " at cutoff " + std::to_string(conv.cutoff));
    } catch (const TruncationError& e) {
      s.passed = false;
      if (s.failures.size() < 10) s.failures.push_back("trial " + std::to_string(t) + ": " + e.what());
    }
  }
  return s;
}

SuiteResult validate_classicality(int trials, std::uint64_t seed) {
  SuiteResult s{.name = "classicality_nonnegativity", .trials = trials, .threshold = 1e-8};
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> lo_dim(1, 8);
  constexpr int kCutoff = 40;

  for (int t = 0; t < trials; ++t) {
    const cplx alpha = std::polar(2.0 * unit(rng), 2.0 * std::numbers::pi * unit(rng));
    const CVector lo = random_pure_vector(lo_dim(rng), kCutoff, rng);
    const FockState state = FockState::product(ModeState::from_amplitudes(coherent_amplitudes(alpha, kCutoff)),
                                               ModeState::from_amplitudes(lo));
    const OperatorExpr f = random_expression(rng, 2, 4);
    const double w = witness_general(f, state);
    // deviation is the amount of negativity
    record(s, std::max(0.0, -w), "trial " + std::to_string(t) + ": witness " + format_double(w) +
                                     " for f = " + to_string(f));
  }
  return s;
}

SuiteResult validate_channel_laws(int trials, std::uint64_t seed) {
  SuiteResult s{.name = "channel_scaling_laws", .trials = trials, .threshold = 1e-12};
  std::mt19937_64 rng(seed ^ 0x243f6a8885a308d3ULL);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  for (int t = 0; t < trials; ++t) {
    const TwoModeProduct ideal{make_state(random_gaussian_params(rng)),
                               make_state(random_gaussian_params(rng))};
    const double theta = 2.0 * std::numbers::pi * unit(rng);
    const double eta = 1.0 - unit(rng);  // (0, 1]
    const double g = 1.0 + 2.0 * unit(rng);

    const double p0 = ordered_variances(ideal, theta).partial_no;
    const double nb = mean_photon(ideal.lo);
    const double lossy = ordered_variances({apply_loss(ideal.si, LossParam(eta)), ideal.lo}, theta).partial_no;
    const double noisy = ordered_variances({apply_gain_noise(ideal.si, GainParam(g)), ideal.lo}, theta).partial_no;
    const double dev = std::max(std::abs(lossy - eta * p0),
                                std::abs(noisy - g * p0 - (g - 1.0) * (2.0 * nb + 1.0)));
    record(s, dev, "trial " + std::to_string(t) + ": scaling-law deviation " + format_double(dev));
  }
  return s;
}

SuiteResult validate_loss_oracle(int trials, std::uint64_t seed) {
  SuiteResult s{.name = "loss_channel_oracle", .trials = trials, .threshold = 1e-8};
  std::mt19937_64 rng(seed ^ 0xa4093822299f31d0ULL);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  constexpr int kCutoff = 64;

  for (int t = 0; t < trials; ++t) {
    StateParams si = random_gaussian_params(rng);
    si.nbar = 0.0;
    const double eta = unit(rng);
    const ModeState mode = single_mode_state(si, kCutoff);
    const ModeState out = beam_splitter_loss(*mode.amplitudes, eta);
    const FieldMoments predicted = field_moments(apply_loss(make_state(si), LossParam(eta)));
    const double dev = std::max({std::abs(normal_moment(out, 0, 1) - predicted.mean_a),
                                 std::abs(normal_moment(out, 0, 2) - predicted.a_sq),
                                 std::abs(normal_moment(out, 1, 1).real() - predicted.n_a)});
    record(s, dev, "trial " + std::to_string(t) + ": beam-splitter deviation " + format_double(dev));
  }
  return s;
}

SuiteResult validate_reorder(int trials, std::uint64_t seed) {
  SuiteResult s{.name = "reorder_matrix_equality", .trials = trials, .threshold = 1e-10};
  std::mt19937_64 rng(seed ^ 0x13198a2e03707344ULL);
  constexpr int kCutoff = 10;
  const LadderMatrices ladder = build_ladder(kCutoff);

  for (int t = 0; t < trials; ++t) {
    const OperatorExpr e = random_expression(rng, 4, 3);
    const int interior = kCutoff - static_cast<int>(e.degree());
    const CMatrix before = CMatrix(matrix_of(e, ladder));
    const CMatrix after = CMatrix(matrix_of(reorder(e), ladder));
    double dev = 0.0;
    for (int i = 0; i < kCutoff * kCutoff; ++i) {
      for (int j = 0; j < kCutoff * kCutoff; ++j) {
        if (i / kCutoff < interior && i % kCutoff < interior && j / kCutoff < interior &&
            j % kCutoff < interior) {
          dev = std::max(dev, std::abs(before(i, j) - after(i, j)));
        }
      }
    }
    record(s, dev, "trial " + std::to_string(t) + ": " + to_string(e));
  }
  if (trials > 0) {
    const OperatorExpr l = homodyne_observable(0.3);
    if (!(formal_normal_order(l, {Mode::A}) == l)) {
      s.passed = false;
      s.failures.push_back("formal_normal_order(L, {A}) != L");
    }
  }
  return s;
}

bool ValidationReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

nlohmann::json ValidationReport::to_json() const {
  nlohmann::json suites_json = nlohmann::json::array();
  for (const auto& s : suites) {
    suites_json.push_back({{"name", s.name},
                           {"passed", s.passed},
                           {"trials", s.trials},
                           {"max_deviation", number_to_json(s.max_deviation)},
                           {"threshold", s.threshold},
                           {"failures", s.failures}});
  }
  return {{"passed", passed()}, {"suites", std::move(suites_json)}, {"warnings", warnings}};
}

ValidationReport cmd_validate(const ValidateConfig& config) {
  if (config.trials < 0) throw InputError("trial count must be >= 0");
  if (config.cutoff_max < 2) throw InputError("cutoff budget must be >= 2");
  ValidationReport report;
  if (config.trials == 0) {
    report.warnings.push_back("zero trials requested: every suite passes vacuously");
  }
  report.suites.push_back(validate_gaussian_fock(config.trials, config.seed, config.cutoff_max));
  report.suites.push_back(validate_classicality(config.trials, config.seed));
  report.suites.push_back(validate_channel_laws(config.trials, config.seed));
  report.suites.push_back(validate_loss_oracle(config.trials, config.seed));
  report.suites.push_back(validate_reorder(config.trials, config.seed));
  return report;
}

}  // namespace losq
