#pragma once

#include "detmult/multiplicities.hpp"
#include "detmult/verify.hpp"

#include <json.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace detmult::cli {

inline constexpr const char* kSchemaVersion = "detmult/1";

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2, kInternalError = 3 };

/// One CLI result. Exact values are carried as decimal or "p/q" strings.
struct OutputRecord {
  std::string schema_version = kSchemaVersion;
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  std::optional<long long> timing_ms;

  nlohmann::json to_json() const;
  static OutputRecord from_json(const nlohmann::json& j);

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

nlohmann::json report_to_json(const MultiplicityReport& report);
nlohmann::json verify_to_json(const VerifyReport& report);

/// Runs the CLI on argv-style arguments (args[0] is the program name).
/// `source`, when given, replaces the slice lengths used by `verify` and `multiplicity`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const LengthSource* source = nullptr);

}  // namespace detmult::cli
