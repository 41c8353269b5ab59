#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace coxkit {

/// One checked statement: an inequality, a hypothesis, an identity.
struct Finding {
  std::string check;
  bool ok = true;
  std::string detail;
  nlohmann::json witness;  // offending face/flat/simplex when !ok
};

/// Structured pass/fail record; passes iff every finding holds.
struct AuditReport {
  std::string name;
  std::vector<Finding> findings;
  std::vector<std::string> notes;

  bool passed() const;
  void add(std::string check, bool ok, std::string detail = {}, nlohmann::json witness = {});
  /// Failed findings only.
  std::vector<Finding> violations() const;
  void merge(const AuditReport& other);
};

nlohmann::json to_json(const AuditReport& r);

}  // namespace coxkit
