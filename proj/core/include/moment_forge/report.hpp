#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "moment_forge/harness.hpp"

namespace moment_forge {

inline constexpr std::string_view kReportSchema = "moment-forge/1";

/// {"schema": "moment-forge/1", "command": {"name", "argv"}, "result": ...}
nlohmann::json report_envelope(std::string_view command, const std::vector<std::string>& argv,
                               nlohmann::json result);

// Exact values are serialized as strings ("a/b", "a/b+c/d*i",
// "a/b + (c/d)*pi"); polynomials as parser-compatible text.
nlohmann::json to_json(const VanishingProfile& profile, const std::vector<std::string>& vars);
nlohmann::json to_json(const MZProbeReport& report, const std::vector<std::string>& vars);
nlohmann::json to_json(const CertResult& result);
nlohmann::json to_json(const DoubleHomogReduction& reduction,
                       const std::vector<std::string>& vars);
nlohmann::json to_json(const CrosscheckReport& report, const std::vector<std::string>& vars);
nlohmann::json to_json(const OnePSReport& report, const std::vector<std::string>& vars);

/// Names used for the torus variables of a reduction: z1..zn.
std::vector<std::string> torus_variable_names(std::size_t n);

/// Checks a document against the versioned schema: envelope keys, no
/// floating-point numbers anywhere, and every exact-value field a string
/// that parses back to an exact scalar. Returns the list of problems
/// (empty when valid).
std::vector<std::string> validate_report(const nlohmann::json& doc);

}  // namespace moment_forge
