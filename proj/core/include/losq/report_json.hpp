#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "losq/witness.hpp"

namespace losq {

/// Doubles as JSON numbers; −∞ and +∞ become the strings "-inf" / "inf",
/// NaN and an empty optional become null.
nlohmann::json db_to_json(std::optional<double> value);
nlohmann::json number_to_json(double value);

nlohmann::json to_json(const WitnessReport& report);
nlohmann::json to_json(const std::vector<WitnessReport>& reports);

/// Shortest round-trip decimal text; "-inf"/"inf"/"nan" for non-finite values.
std::string format_double(double value);

}  // namespace losq
