#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace losq {

/// One measured homodyne setting.
struct MomentRecord {
  double theta_rad = 0.0;
  double var_L = 0.0;           ///< measured <(ΔL)²>
  double nb = 0.0;              ///< blocked-signal calibration, equals <b†b>
  std::optional<double> na;     ///< <a†a> when available
  std::size_t line = 0;         ///< 1-based source line
};

struct MomentTable {
  std::vector<MomentRecord> rows;
  std::vector<std::string> warnings;
};

/// Reads "theta_rad,var_L,nb[,na]" with a required header row, comma
/// separators and '.' decimals. Columns may appear in any order; unknown
/// columns are ignored with a warning. Throws InputError with the line number.
MomentTable read_moment_csv(std::istream& in);

}  // namespace losq
