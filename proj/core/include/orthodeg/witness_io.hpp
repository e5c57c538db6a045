#pragma once

#include <string>

#include "orthodeg/witness.hpp"

namespace orthodeg::numeric {

/// {"n":..,"slice":{"seed":..,"coefficients":[[re,im],..]},
///  "points":[[[re,im],..],..],"tolerance":..}
std::string witness_to_json(const WitnessSet& ws, int indent = -1);

/// Throws std::invalid_argument on malformed input.
WitnessSet witness_from_json(const std::string& text);

}  // namespace orthodeg::numeric
