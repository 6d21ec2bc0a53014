#include "nullag/report.hpp"

#include "nullag/version.hpp"

namespace nullag {

Json to_json(const EvalPoint& p) {
  return Json{{"t", p.t}, {"x", p.x}, {"xdot", p.xdot}, {"xddot", p.xddot}};
}

Json to_json(const NullnessReport& r) {
  return Json{{"is_null", r.is_null},
              {"max_abs_residual", r.max_abs_residual},
              {"worst_point", to_json(r.worst_point)},
              {"samples_used", r.samples_used},
              {"tolerance", r.tolerance}};
}

Json to_json(const ExactnessReport& r) {
  return Json{{"phi_start", r.phi_start},
              {"phi_end", r.phi_end},
              {"delta_phi", r.delta_phi},
              {"is_exact", r.is_exact},
              {"tolerance", r.tolerance}};
}

Json to_json(const ActionResult& r) {
  return Json{{"value", r.value}, {"panels", r.panels}, {"estimated_error", r.estimated_error}};
}

Json to_json(const OdeForm& ode) {
  return Json{{"P", to_text(ode.P)}, {"Q", to_text(ode.Q)}};
}

Json to_json(const OdeCheck& c) {
  return Json{{"max_abs_q", c.max_abs_q},
              {"min_abs_p", c.min_abs_p},
              {"samples", c.samples},
              {"pass", c.pass}};
}

Json report_envelope(const std::string& command, Json inputs, const std::string& verdict,
                     Json payload) {
  Json envelope;
  envelope["schema_version"] = kReportSchemaVersion;
  envelope["tool_version"] = kToolVersion;
  envelope["command"] = command;
  envelope["inputs"] = std::move(inputs);
  envelope["verdict"] = verdict;
  envelope["payload"] = std::move(payload);
  return envelope;
}

}  // namespace nullag
