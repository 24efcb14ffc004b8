#pragma once

#include <json.hpp>

#include "lasgap/polyopt.hpp"
#include "lasgap/tardy.hpp"

namespace lasgap {

/// {"n": int, "weights": [{"set": [1-based ints], "value": "p/q"}, ...]}
nlohmann::json to_json(const PseudoDistribution& p);
PseudoDistribution distribution_from_json(const nlohmann::json& j);

/// {"coeffs": [{"var": int, "value": "p/q"}, ...], "rhs": "p/q"}
/// Variables are 1-based on the wire, 0-based in memory.
nlohmann::json to_json(const LinearConstraint& c);
LinearConstraint constraint_from_json(const nlohmann::json& j);

/// {"m": int, "P": int}; derived arrays are recomputed, never stored.
nlohmann::json to_json(const GapInstance& instance);
GapInstance instance_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PsdVerdict& verdict);
nlohmann::json to_json(const MassCheck& check);
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const GapVerification& verification);
nlohmann::json to_json(const PolyoptVerification& verification);

}  // namespace lasgap
