#include "moment_forge/report.hpp"

#include <set>

#include "moment_forge/io.hpp"

namespace moment_forge {

using nlohmann::json;

namespace {

json value_rows(const std::vector<PiScalar>& values) {
  json rows = json::array();
  for (std::size_t k = 0; k < values.size(); ++k) {
    rows.push_back({{"m", k + 1}, {"value", values[k].to_string()}});
  }
  return rows;
}

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }
json optional_int(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

const std::set<std::string>& exact_fields() {
  static const std::set<std::string> fields = {"value", "exact_value", "gaussian", "torus",
                                               "constant"};
  return fields;
}

void walk(const json& node, const std::string& path, std::vector<std::string>& problems) {
  if (node.is_number_float()) {
    problems.push_back(path + ": floating-point number");
    return;
  }
  if (node.is_array()) {
    for (std::size_t k = 0; k < node.size(); ++k) {
      walk(node[k], path + "[" + std::to_string(k) + "]", problems);
    }
    return;
  }
  if (!node.is_object()) return;
  for (const auto& [key, child] : node.items()) {
    const std::string child_path = path + "." + key;
    if (exact_fields().count(key) != 0) {
      if (child.is_null() && key == "constant") continue;
      if (!child.is_string()) {
        problems.push_back(child_path + ": exact value must be a string");
        continue;
      }
      try {
        (void)PiScalar::parse(child.get<std::string>());
      } catch (const std::exception&) {
        problems.push_back(child_path + ": not an exact scalar: " + child.get<std::string>());
      }
      continue;
    }
    walk(child, child_path, problems);
  }
}

}  // namespace

json report_envelope(std::string_view command, const std::vector<std::string>& argv,
                     json result) {
  return json{{"schema", std::string(kReportSchema)},
              {"command", {{"name", std::string(command)}, {"argv", argv}}},
              {"result", std::move(result)}};
}

std::vector<std::string> torus_variable_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t k = 1; k <= n; ++k) names.push_back(n == 1 ? "z" : "z" + std::to_string(k));
  return names;
}

json to_json(const VanishingProfile& profile, const std::vector<std::string>& vars) {
  return json{{"functional", std::string(to_string(profile.functional))},
              {"poly", format_poly(profile.poly, vars)},
              {"bound", profile.bound},
              {"values", value_rows(profile.values)},
              {"first_nonzero", optional_int(profile.first_nonzero)},
              {"all_zero", profile.all_zero}};
}

json to_json(const MZProbeReport& report, const std::vector<std::string>& vars) {
  return json{{"profile", to_json(report.profile, vars)},
              {"q", format_poly(report.companion_poly, vars)},
              {"companion", value_rows(report.companion)},
              {"last_nonzero", optional_int(report.last_nonzero)},
              {"eventually_zero_up_to_bound", report.eventually_zero_up_to_bound},
              {"counterexample_candidate", report.counterexample_candidate()}};
}

json to_json(const CertResult& result) {
  return json{{"prime", result.prime},
              {"exact_value", result.exact_value.to_string()},
              {"residue", result.residue},
              {"expected", result.expected},
              {"valid", result.valid},
              {"status", std::string(to_string(result.status))}};
}

json to_json(const DoubleHomogReduction& reduction, const std::vector<std::string>& vars) {
  json pairs = json::array();
  for (const auto& [x, y] : reduction.pairs) pairs.push_back({vars.at(x), vars.at(y)});
  const std::vector<std::string> torus = torus_variable_names(reduction.pairs.size());
  return json{{"pairs", pairs},
              {"degrees", reduction.degrees},
              {"torus_variables", torus},
              {"angular", format_poly(reduction.angular, torus)},
              {"radial_constant", reduction.radial_constant_formula()}};
}

json to_json(const CrosscheckReport& report, const std::vector<std::string>& vars) {
  json rows = json::array();
  for (const CrosscheckRow& row : report.rows) {
    rows.push_back({{"m", row.m},
                    {"gaussian", row.gaussian.to_string()},
                    {"torus", row.torus.to_string()},
                    {"constant", row.constant ? json(row.constant->get_str()) : json(nullptr)},
                    {"vanishing_equivalent", row.vanishing_equivalent},
                    {"ratio_holds", row.ratio_holds ? json(*row.ratio_holds) : json(nullptr)}});
  }
  return json{{"reduction", to_json(report.reduction, vars)},
              {"rows", rows},
              {"all_hold", report.all_hold}};
}

json to_json(const OnePSReport& report, const std::vector<std::string>& vars) {
  std::vector<std::string> names{"t"};
  names.insert(names.end(), vars.begin(), vars.end());
  return json{{"variables", names},
              {"substituted", format_poly(report.substituted, names)},
              {"min_t_exponent", optional_int(report.min_t_exponent)},
              {"member", report.member},
              {"inverse",
               {{"substituted", format_poly(report.substituted_inverse, names)},
                {"min_t_exponent", optional_int(report.min_t_exponent_inverse)},
                {"member", report.member_inverse}}}};
}

std::vector<std::string> validate_report(const json& doc) {
  std::vector<std::string> problems;
  if (!doc.is_object()) return {"document is not an object"};
  if (!doc.contains("schema") || doc["schema"] != std::string(kReportSchema)) {
    problems.push_back("schema must be \"" + std::string(kReportSchema) + "\"");
  }
  if (!doc.contains("command") || !doc["command"].is_object() ||
      !doc["command"].contains("name") || !doc["command"]["name"].is_string() ||
      !doc["command"].contains("argv") || !doc["command"]["argv"].is_array()) {
    problems.push_back("command must be {\"name\": string, \"argv\": [string]}");
  } else {
    for (const auto& a : doc["command"]["argv"]) {
      if (!a.is_string()) problems.push_back("command.argv entries must be strings");
    }
  }
  if (!doc.contains("result")) {
    problems.push_back("missing result");
  } else {
    walk(doc["result"], "result", problems);
  }
  return problems;
}

}  // namespace moment_forge
