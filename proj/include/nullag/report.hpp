#pragma once

#include <string>

#include <json.hpp>

#include "nullag/action.hpp"
#include "nullag/exactness.hpp"
#include "nullag/inertia.hpp"
#include "nullag/variational.hpp"

namespace nullag {

using Json = nlohmann::ordered_json;

Json to_json(const EvalPoint& p);
Json to_json(const NullnessReport& r);
Json to_json(const ExactnessReport& r);
Json to_json(const ActionResult& r);
Json to_json(const OdeForm& ode);
Json to_json(const OdeCheck& c);

/// The envelope every CLI command emits: command name, echoed inputs, a
/// pass/fail/n-a verdict consistent with the payload booleans, and the
/// command-specific payload.
Json report_envelope(const std::string& command, Json inputs, const std::string& verdict,
                     Json payload);

}  // namespace nullag
