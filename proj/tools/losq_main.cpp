// losq: LO-agnostic squeezing witnesses from the command line.
//
//   losq reproduce --figure <fluctuations|noise-sweep|robustness> --out <dir> [--svg] [--points N]
//   losq witness --input <csv> [--tol 1e-9] --out <json>
//   losq validate [--trials N] [--seed S] [--cutoff-max C] [--out <json>]

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "losq/error.hpp"
#include "losq/harness.hpp"

namespace {

int code(losq::ExitCode c) { return static_cast<int>(c); }

void emit_json(const nlohmann::json& j, const std::optional<std::string>& path) {
  const std::string text = j.dump(2) + "\n";
  if (!path) {
    std::cout << text;
    return;
  }
  std::ofstream out(*path, std::ios::binary | std::ios::trunc);
  if (!out) throw losq::InputError("cannot write " + *path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LO-agnostic squeezing witnesses for two-mode bosonic states"};
  app.require_subcommand(1);

  losq::ReproduceConfig reproduce;
  std::string out_dir;
  auto* rep = app.add_subcommand("reproduce", "Regenerate figure data (CSV, JSON, optional SVG)");
  rep->add_option("--figure", reproduce.figure, "fluctuations | noise-sweep | robustness")->required();
  rep->add_option("--out", out_dir, "Output directory")->required();
  rep->add_flag("--svg", reproduce.svg, "Also write an SVG plot");
  rep->add_option("--points", reproduce.points, "Grid size (0 = figure default)")->check(CLI::NonNegativeNumber);
  rep->add_option("--db-floor", reproduce.db_floor, "Plot clamp for -inf dB values");

  std::string input;
  std::optional<std::string> witness_out;
  double tol = losq::kDefaultVerdictTolerance;
  auto* wit = app.add_subcommand("witness", "Evaluate the witness on measured moments");
  wit->add_option("--input", input, "CSV with theta_rad,var_L,nb[,na]")->required();
  wit->add_option("--tol", tol, "Verdict tolerance")->check(CLI::NonNegativeNumber);
  wit->add_option("--out", witness_out, "JSON report path (stdout if omitted)");

  losq::ValidateConfig validate;
  std::optional<std::string> validate_out;
  auto* val = app.add_subcommand("validate", "Run the Fock-oracle property suites");
  val->add_option("--trials", validate.trials, "Random draws per suite")->check(CLI::NonNegativeNumber);
  val->add_option("--seed", validate.seed, "RNG seed");
  val->add_option("--cutoff-max", validate.cutoff_max, "Largest Fock cutoff")->check(CLI::Range(2, 512));
  val->add_option("--out", validate_out, "JSON report path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : code(losq::ExitCode::input_error);
  }

  try {
    if (*rep) {
      reproduce.out_dir = out_dir;
      const auto result = losq::cmd_reproduce(reproduce);
      for (const auto& f : result.files) std::cerr << "wrote " << f.string() << "\n";
      return code(losq::ExitCode::success);
    }
    if (*wit) {
      std::ifstream in(input, std::ios::binary);
      if (!in) throw losq::InputError("cannot open " + input);
      const auto result = losq::cmd_witness(in, tol);
      for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
      emit_json(result.report, witness_out);
      return code(losq::ExitCode::success);
    }
    if (*val) {
      const auto report = losq::cmd_validate(validate);
      for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
      emit_json(report.to_json(), validate_out);
      return code(report.passed() ? losq::ExitCode::success : losq::ExitCode::validation_failure);
    }
  } catch (const losq::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return code(losq::ExitCode::input_error);
  } catch (const losq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return code(losq::ExitCode::input_error);
  }
  return code(losq::ExitCode::success);
}
