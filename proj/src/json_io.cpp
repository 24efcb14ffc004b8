#include "lasgap/json_io.hpp"

#include <stdexcept>

namespace lasgap {

namespace {

using nlohmann::json;

json set_to_json(Subset s) {
  json labels = json::array();
  for (int e : s.elements()) labels.push_back(e + 1);
  return labels;
}

Subset set_from_json(const json& j, int n) {
  Subset s;
  for (const auto& label : j) {
    const int e = label.get<int>() - 1;
    if (e < 0 || e >= n) throw std::invalid_argument("set element outside 1..n");
    s = s | Subset::single(e);
  }
  return s;
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  return parse_rational(j.get<std::string>());
}

}  // namespace

json to_json(const PseudoDistribution& p) {
  json weights = json::array();
  for (const auto& [set, weight] : p.weights()) {
    weights.push_back({{"set", set_to_json(set)}, {"value", to_string(weight)}});
  }
  return {{"n", p.ground_set_size()}, {"weights", weights}};
}

PseudoDistribution distribution_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  PseudoDistribution p(n);
  for (const auto& entry : j.at("weights")) {
    p.set_weight(set_from_json(entry.at("set"), n), rational_from_json(entry.at("value")));
  }
  return p;
}

json to_json(const LinearConstraint& c) {
  json coefficients = json::array();
  for (const auto& [variable, value] : c.coefficients) {
    coefficients.push_back({{"var", variable + 1}, {"value", to_string(value)}});
  }
  return {{"coeffs", coefficients}, {"rhs", to_string(c.rhs)}};
}

LinearConstraint constraint_from_json(const json& j) {
  LinearConstraint c;
  for (const auto& entry : j.at("coeffs")) {
    const int variable = entry.at("var").get<int>() - 1;
    if (variable < 0) throw std::invalid_argument("constraint variable labels are 1-based");
    c.coefficients[variable] = rational_from_json(entry.at("value"));
  }
  c.rhs = rational_from_json(j.at("rhs"));
  return c;
}

json to_json(const GapInstance& instance) {
  if (!instance.base().fits_slong_p()) {
    throw std::domain_error("instance base too large for the JSON schema");
  }
  return {{"m", instance.block_count()}, {"P", instance.base().get_si()}};
}

GapInstance instance_from_json(const json& j) {
  const int m = j.at("m").get<int>();
  const auto& base = j.at("P");
  if (base.is_string()) {
    return GapInstance(m, Integer(base.get<std::string>()));
  }
  return GapInstance(m, Integer(std::to_string(base.get<long long>())));
}

json to_json(const PsdVerdict& verdict) {
  json out{{"status", std::string(to_string(verdict.status))},
           {"method", verdict.method},
           {"fast_path", verdict.fast_path}};
  if (verdict.inertia) {
    out["inertia"] = {{"positive", verdict.inertia->positive},
                      {"negative", verdict.inertia->negative},
                      {"zero", verdict.inertia->zero}};
  }
  if (verdict.lambda_min) out["lambda_min"] = *verdict.lambda_min;
  if (verdict.margin) out["margin"] = *verdict.margin;
  if (verdict.witness) {
    json direction = json::array();
    for (Eigen::Index i = 0; i < verdict.witness->size(); ++i) {
      direction.push_back(to_string((*verdict.witness)(i)));
    }
    out["witness"] = direction;
  }
  if (verdict.witness_value) out["witness_value"] = to_string(*verdict.witness_value);
  if (!verdict.notes.empty()) out["notes"] = verdict.notes;
  return out;
}

json to_json(const MassCheck& check) {
  return {{"mass", to_string(check.mass)},
          {"residual", to_string(check.residual)},
          {"pass", check.pass}};
}

json to_json(const VerificationReport& report) {
  json constraints = json::array();
  for (std::size_t i = 0; i < report.condition3.size(); ++i) {
    json entry = to_json(report.condition3[i]);
    entry["constraint"] = i;
    constraints.push_back(std::move(entry));
  }
  return {{"condition1", to_json(report.condition1)},
          {"condition2", to_json(report.condition2)},
          {"condition3", constraints},
          {"overall", std::string(to_string(report.overall))}};
}

json to_json(const GapVerification& v) {
  json rungs = json::array();
  for (const LadderRung& rung : v.rungs) {
    rungs.push_back({{"P", rung.base.get_str()}, {"report", to_json(rung.report)}});
  }
  json out{{"theorem", v.spec.theorem},
           {"k", v.spec.gap},
           {"certificate_level", v.spec.level},
           {"support_threshold", v.spec.support_threshold},
           {"alpha", to_string(v.spec.alpha)},
           {"level", v.level},
           {"T", to_string(v.relaxation_bound)},
           {"integral_optimum", v.integral_optimum},
           {"gap", to_string(v.gap)},
           {"gap_statement",
            to_string(v.gap) + " at level " + std::to_string(v.level)},
           {"rungs", rungs},
           {"overall", std::string(to_string(v.overall))}};
  if (v.passing_base) out["passing_P"] = v.passing_base->get_str();
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

json to_json(const PolyoptVerification& v) {
  json rungs = json::array();
  for (const EpsilonRung& rung : v.rungs) {
    rungs.push_back({{"epsilon", to_string(rung.epsilon)},
                     {"condition1", to_json(rung.condition1)},
                     {"condition2", to_json(rung.condition2)},
                     {"weyl_bound", to_string(rung.weyl_bound)},
                     {"overall", std::string(to_string(rung.overall))}});
  }
  json out{{"n", v.n},
           {"k", v.degree},
           {"level", v.level},
           {"integral_optimum", to_string(v.optimum)},
           {"rungs", rungs},
           {"overall", std::string(to_string(v.overall))}};
  if (v.passing_epsilon) {
    out["passing_epsilon"] = to_string(*v.passing_epsilon);
    out["pseudo_value"] = to_string(v.pseudo_value);
    out["superoptimality_margin"] = to_string(v.margin);
    out["gap_statement"] = "pseudo-value " + to_string(v.pseudo_value) +
                           " exceeds integral optimum " + to_string(v.optimum) + " at level " +
                           std::to_string(v.level);
  }
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

}  // namespace lasgap
