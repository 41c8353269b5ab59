#include "coxkit/report.hpp"

#include <algorithm>

namespace coxkit {

bool AuditReport::passed() const {
  return std::all_of(findings.begin(), findings.end(), [](const Finding& f) { return f.ok; });
}

void AuditReport::add(std::string check, bool ok, std::string detail, nlohmann::json witness) {
  findings.push_back({std::move(check), ok, std::move(detail), std::move(witness)});
}

std::vector<Finding> AuditReport::violations() const {
  std::vector<Finding> out;
  std::copy_if(findings.begin(), findings.end(), std::back_inserter(out),
               [](const Finding& f) { return !f.ok; });
  return out;
}

void AuditReport::merge(const AuditReport& other) {
  findings.insert(findings.end(), other.findings.begin(), other.findings.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

nlohmann::json to_json(const AuditReport& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["passed"] = r.passed();
  j["checked"] = r.findings.size();
  nlohmann::json v = nlohmann::json::array();
  for (const auto& f : r.findings) {
    if (f.ok) continue;
    nlohmann::json e{{"check", f.check}, {"detail", f.detail}};
    if (!f.witness.is_null()) e["witness"] = f.witness;
    v.push_back(std::move(e));
  }
  j["violations"] = std::move(v);
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

}  // namespace coxkit
