#include "losq/moments_csv.hpp"

#include <charconv>
#include <cmath>
#include <string_view>

#include "losq/error.hpp"

namespace losq {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                         : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double to_number(std::string_view text, const char* column, std::size_t line) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size() ||
      !std::isfinite(value)) {
    throw InputError(std::string("column ") + column + ": cannot parse '" + std::string(text) + "'",
                     line);
  }
  return value;
}

}  // namespace

MomentTable read_moment_csv(std::istream& in) {
  MomentTable table;
  std::string line;
  std::size_t line_no = 0;

  int col_theta = -1;
  int col_var = -1;
  int col_nb = -1;
  int col_na = -1;
  std::size_t n_columns = 0;
  bool have_header = false;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = trim(line);
    if (view.empty()) continue;
    const auto fields = split(view);

    if (!have_header) {
      have_header = true;
      n_columns = fields.size();
      for (std::size_t k = 0; k < fields.size(); ++k) {
        const std::string_view name = trim(fields[k]);
        int* slot = name == "theta_rad" ? &col_theta
                    : name == "var_L"   ? &col_var
                    : name == "nb"      ? &col_nb
                    : name == "na"      ? &col_na
                                        : nullptr;
        if (slot == nullptr) {
          table.warnings.push_back("ignoring unknown column '" + std::string(name) + "'");
          continue;
        }
        if (*slot >= 0) throw InputError("duplicate column '" + std::string(name) + "'", line_no);
        *slot = static_cast<int>(k);
      }
      if (col_theta < 0 || col_var < 0 || col_nb < 0) {
        throw InputError("header must contain theta_rad, var_L and nb", line_no);
      }
      continue;
    }

    if (fields.size() != n_columns) {
      throw InputError("expected " + std::to_string(n_columns) + " fields, found " +
                           std::to_string(fields.size()),
                       line_no);
    }
    MomentRecord r;
    r.line = line_no;
    r.theta_rad = to_number(fields[col_theta], "theta_rad", line_no);
    r.var_L = to_number(fields[col_var], "var_L", line_no);
    r.nb = to_number(fields[col_nb], "nb", line_no);
    if (col_na >= 0 && !trim(fields[col_na]).empty()) {
      r.na = to_number(fields[col_na], "na", line_no);
      if (*r.na < 0.0) throw InputError("na must be >= 0", line_no);
    }
    if (r.var_L < 0.0) throw InputError("var_L must be >= 0", line_no);
    if (!(r.nb > 0.0)) throw InputError("nb must be > 0 (shot-noise calibration)", line_no);
    table.rows.push_back(r);
  }
  if (!have_header) throw InputError("empty input: header row required");
  return table;
}

}  // namespace losq
