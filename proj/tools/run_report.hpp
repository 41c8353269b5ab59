#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "coxkit/report.hpp"

namespace coxkit::cli {

std::string sha256_hex(const std::string& bytes);

/// One invocation: the command line, a digest of its input, every audit
/// run and the command-specific result.
struct RunReport {
  std::string command;
  std::string input_digest;  // empty when the command reads no file
  std::vector<AuditReport> audits;
  nlohmann::json result = nlohmann::json::object();

  bool passed() const;
};

/// Sorted keys; identical inputs give identical text.
nlohmann::json to_json(const RunReport& r);

}  // namespace coxkit::cli
