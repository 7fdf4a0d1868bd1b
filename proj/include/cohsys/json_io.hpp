#pragma once

#include <json.hpp>

#include "cohsys/alpha_interval.hpp"
#include "cohsys/classification.hpp"
#include "cohsys/stability.hpp"

namespace cohsys {

using Json = nlohmann::ordered_json;

// Exact rationals are written as "p/q" strings; an infinite endpoint is null.

Json to_json(const AlphaInterval& interval);
Json to_json(const Verdict& verdict);
Json to_json(const StabilityReport& report);
Json to_json(const CrossCheckReport& report);

/// {"q": int, "splitting": [ints], "sections": [[[coeffs] per component] per section]}.
/// Coefficients run from the x^D term to the y^D term; [] is a zero component.
Json to_json(const SystemInstance& inst);

/// Throws std::invalid_argument on any structural or arithmetic problem.
SystemInstance instance_from_json(const Json& j);

}  // namespace cohsys
