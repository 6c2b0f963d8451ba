#include "losq/report_json.hpp"

#include <charconv>
#include <cmath>

namespace losq {

nlohmann::json number_to_json(double value) {
  if (std::isnan(value)) return nullptr;
  if (std::isinf(value)) return value < 0 ? "-inf" : "inf";
  return value;
}

nlohmann::json db_to_json(std::optional<double> value) {
  if (!value) return nullptr;
  return number_to_json(*value);
}

nlohmann::json to_json(const WitnessReport& r) {
  return {
      {"theta", r.theta},
      {"var_L", r.var_L},
      {"partial_no", r.partial_no},
      {"full_no", r.full_no},
      {"shot_noise", r.shot_noise},
      {"noise_db", db_to_json(r.noise_db)},
      {"verdict", std::string(to_string(r.verdict))},
      {"standard_criterion_negative", r.standard_criterion_negative},
  };
}

nlohmann::json to_json(const std::vector<WitnessReport>& reports) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value < 0 ? "-inf" : "inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

}  // namespace losq
