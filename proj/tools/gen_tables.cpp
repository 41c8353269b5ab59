// Regenerates src/quasi_lanner_data.inc by exhaustive search.
#include <iostream>

#include "coxkit/classify.hpp"

int main() {
  std::cout << "R\"QL(\n";
  for (std::size_t r = 4; r <= 10; ++r) {
    auto found = coxkit::enumerate_quasi_lanner(r);
    std::cerr << "rank " << r << ": " << found.size() << " diagrams\n";
    for (std::size_t i = 0; i < found.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof name, "QL%zu-%02zu", r, i + 1);
      std::cout << "# " << name << '\n' << coxkit::to_cox(found[i]) << "%%\n";
    }
  }
  std::cout << ")QL\"\n";
}
