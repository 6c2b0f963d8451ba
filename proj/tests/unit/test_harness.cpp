#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "losq/error.hpp"
#include "losq/harness.hpp"
#include "losq/report_json.hpp"
#include "losq/svg_plot.hpp"
#include "test_support.hpp"

namespace losq {
namespace {

using testing::three_db_zeta;

std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("losq_unit_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json witness_json(const std::string& csv) {
  std::istringstream in(csv);
  return cmd_witness(in).report;
}

TEST(FormatDouble, ShortestAndNonFinite) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(-2.5e-12), "-2.5e-12");
  EXPECT_EQ(format_double(-std::numeric_limits<double>::infinity()), "-inf");
  EXPECT_EQ(format_double(std::nan("")), "nan");
  EXPECT_EQ(number_to_json(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_TRUE(number_to_json(std::nan("")).is_null());
  EXPECT_TRUE(db_to_json(std::nullopt).is_null());
}

TEST(CmdWitness, SqueezedRowIsNonclassical) {
  const auto r = witness_json("theta_rad,var_L,nb\n1.5708,0.0620,0.1241\n");
  const auto& row = r["rows"][0];
  EXPECT_NEAR(row["partial_no"].get<double>(), -0.0621, 1e-12);
  EXPECT_NEAR(row["noise_db"].get<double>(), 10.0 * std::log10(0.0620 / 0.1241), 1e-12);
  EXPECT_NEAR(row["noise_db"].get<double>(), -3.01, 5e-3);
  EXPECT_EQ(row["verdict"], "nonclassical_SI");
  EXPECT_EQ(r["summary"]["nonclassical_SI"], 1);
}

TEST(CmdWitness, ShotNoiseBoundaryIsClassical) {
  const auto r = witness_json("theta_rad,var_L,nb\n0,0.1241,0.1241\n");
  const auto& row = r["rows"][0];
  EXPECT_EQ(row["partial_no"].get<double>(), 0.0);
  EXPECT_EQ(row["noise_db"].get<double>(), 0.0);
  EXPECT_EQ(row["verdict"], "classical_consistent");
}

TEST(CmdWitness, ZeroVarianceAndStandardCriterion) {
  const auto r = witness_json("theta_rad,var_L,nb,na\n0,0,0.5,0.1\n0,0.6,0.5,0.3\n");
  EXPECT_EQ(r["rows"][0]["noise_db"], "-inf");
  EXPECT_EQ(r["rows"][0]["verdict"], "nonclassical_SI");
  EXPECT_EQ(r["rows"][1]["verdict"], "classical_consistent");
  EXPECT_NEAR(r["rows"][1]["full_no"].get<double>(), -0.2, 1e-12);
  EXPECT_EQ(r["rows"][1]["standard_criterion_negative"], true);
  EXPECT_EQ(r["summary"]["standard_criterion_negative"], 2);
}

TEST(CmdWitness, InvalidCalibrationReportsLine) {
  std::istringstream in("theta_rad,var_L,nb\n0,0.1,0.1\n0,0.1,0\n");
  try {
    cmd_witness(in);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Figures, FluctuationCurve) {
  const auto rows = fluctuation_curve(361);
  ASSERT_EQ(rows.size(), 361u);
  EXPECT_EQ(rows.front().theta_rad, 0.0);
  EXPECT_NEAR(rows.back().theta_rad, 2.0 * std::numbers::pi, 1e-15);
  double min_partial = 1e9;
  double min_full = 1e9;
  for (const auto& r : rows) {
    min_partial = std::min(min_partial, r.partial_no);
    min_full = std::min(min_full, r.full_no);
  }
  EXPECT_GE(min_partial, -1e-12);
  EXPECT_NEAR(min_full, std::exp(-2.0 * three_db_zeta()) - 1.0, 1e-12);
  EXPECT_NEAR(min_full, -0.498813, 1e-4);
}

TEST(Figures, NoiseSweepCurve) {
  const auto rows = noise_sweep_curve(121);
  ASSERT_EQ(rows.size(), 122u);  // matched point inserted
  EXPECT_NEAR(rows.front().lo_mean_photon, 1e-2, 1e-15);
  EXPECT_NEAR(rows.back().lo_mean_photon, 1e4, 1e-8);
  for (std::size_t k = 1; k < rows.size(); ++k) {
    EXPECT_GT(rows[k].lo_mean_photon, rows[k - 1].lo_mean_photon);
    EXPECT_LT(rows[k].noise_db_coherent, rows[k - 1].noise_db_coherent);
  }
  EXPECT_NEAR(rows.back().noise_db_coherent, -3.0, 1e-3);
  const auto matched = std::find_if(rows.begin(), rows.end(), [](const NoiseSweepRow& r) {
    return std::isinf(r.noise_db_squeezed);
  });
  ASSERT_NE(matched, rows.end());
  EXPECT_NEAR(matched->lo_mean_photon, std::pow(std::sinh(three_db_zeta()), 2), 1e-15);
}

TEST(Figures, RobustnessCurve) {
  const auto rows = robustness_curve(21);
  ASSERT_EQ(rows.size(), 42u);
  for (const auto& r : rows) EXPECT_NEAR(r.partial_no, r.predicted, 1e-12);
  EXPECT_EQ(rows.front().channel, "loss");
  EXPECT_EQ(rows.front().parameter, 0.0);
  EXPECT_NEAR(rows.front().partial_no, 0.0, 1e-15);
  const double ideal = std::pow(std::sinh(three_db_zeta()), 2) + 10.0 * std::exp(-2.0 * three_db_zeta()) - 10.0;
  EXPECT_NEAR(rows[20].partial_no, ideal, 1e-12);
  EXPECT_NEAR(rows[20].partial_no, -4.864, 1e-3);
}

TEST(CmdReproduce, WritesArtifactsDeterministically) {
  for (const std::string fig : {"fluctuations", "noise-sweep", "robustness"}) {
    const auto a = scratch_dir(fig + "_a");
    const auto b = scratch_dir(fig + "_b");
    const auto ra = cmd_reproduce({.figure = fig, .out_dir = a, .svg = true});
    const auto rb = cmd_reproduce({.figure = fig, .out_dir = b, .svg = true});
    ASSERT_EQ(ra.files.size(), 3u);
    for (std::size_t k = 0; k < ra.files.size(); ++k) {
      EXPECT_TRUE(std::filesystem::exists(ra.files[k]));
      EXPECT_EQ(slurp(ra.files[k]), slurp(rb.files[k])) << ra.files[k];
    }
  }
  EXPECT_THROW(cmd_reproduce({.figure = "nope", .out_dir = scratch_dir("bad")}), InputError);
}

TEST(CmdReproduce, FluctuationCsvLayout) {
  const auto dir = scratch_dir("layout");
  cmd_reproduce({.figure = "fluctuations", .out_dir = dir});
  std::istringstream csv(slurp(dir / "fluctuations.csv"));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "theta_rad,partial_no,full_no");
  int rows = 0;
  while (std::getline(csv, line)) ++rows;
  EXPECT_EQ(rows, 361);
}

TEST(RenderSvg, DeterministicAndClampsFloor) {
  PlotSpec spec{.title = "t", .x_label = "x", .y_label = "y", .log_x = true, .y_floor = -10.0};
  spec.series.push_back({.label = "s", .x = {0.1, 1.0, 10.0}, .y = {0.0, -std::numeric_limits<double>::infinity(), -1.0}});
  const std::string svg = render_svg(spec);
  EXPECT_EQ(svg, render_svg(spec));
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_EQ(svg.find("inf"), std::string::npos);
  EXPECT_EQ(svg.find("nan"), std::string::npos);
}

TEST(CmdValidate, ZeroTrialsIsVacuousPassWithWarning) {
  const auto report = cmd_validate({.trials = 0});
  EXPECT_TRUE(report.passed());
  EXPECT_FALSE(report.warnings.empty());
}

TEST(CmdValidate, SmallRunPassesAndIsReproducible) {
  const auto a = cmd_validate({.trials = 3, .seed = 7});
  EXPECT_TRUE(a.passed()) << a.to_json().dump(2);
  EXPECT_EQ(a.to_json(), cmd_validate({.trials = 3, .seed = 7}).to_json());
  EXPECT_EQ(a.suites.size(), 5u);
}

TEST(CmdValidate, TinyCutoffBudgetReportsConvergenceFailure) {
  const auto s = validate_gaussian_fock(5, 42, 4);
  EXPECT_FALSE(s.passed);
  ASSERT_FALSE(s.failures.empty());
  EXPECT_NE(s.failures[0].find("converge"), std::string::npos);
}

}  // namespace
}  // namespace losq
