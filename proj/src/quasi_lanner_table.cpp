#include <sstream>

#include "coxkit/classify.hpp"

namespace coxkit {

namespace {

// Blocks in `.cox` format separated by "%%" lines; the first comment line of
// each block carries the entry name. Regenerate with `gen_tables`.
constexpr const char* kQuasiLannerData =
#include "quasi_lanner_data.inc"
    ;

std::vector<QuasiLannerEntry> load() {
  std::vector<QuasiLannerEntry> out;
  std::istringstream in(kQuasiLannerData);
  std::string line, block, name;
  auto flush = [&] {
    if (!block.empty()) out.push_back({name, parse_diagram(block)});
    block.clear();
    name.clear();
  };
  while (std::getline(in, line)) {
    if (line == "%%") {
      flush();
      continue;
    }
    if (name.empty() && line.rfind("# ", 0) == 0) name = line.substr(2);
    block += line + '\n';
  }
  flush();
  return out;
}

}  // namespace

const std::vector<QuasiLannerEntry>& quasi_lanner_table() {
  static const std::vector<QuasiLannerEntry> table = load();
  return table;
}

}  // namespace coxkit
