#include "run_report.hpp"

#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

namespace coxkit::cli {

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return os.str();
}

bool RunReport::passed() const {
  for (const auto& a : audits)
    if (!a.passed()) return false;
  return true;
}

nlohmann::json to_json(const RunReport& r) {
  nlohmann::json audits = nlohmann::json::array();
  for (const auto& a : r.audits) audits.push_back(coxkit::to_json(a));
  return {
      {"command", r.command},
      {"input_digest", r.input_digest},
      {"version", COXKIT_VERSION},
      {"constants", {{"weight_one_max", 7}, {"weight_third_max", 15}, {"C", "29/3"}, {"bound_offset", 68}}},
      {"audits", audits},
      {"result", r.result},
      {"passed", r.passed()},
  };
}

}  // namespace coxkit::cli
