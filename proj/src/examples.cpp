#include "coxkit/examples.hpp"

#include <string>

#include "coxkit/errors.hpp"

namespace coxkit {

namespace {

std::string upper(int i) { return "u" + std::to_string(i); }
std::string lower(int i) { return "l" + std::to_string(i); }

// Pair layout of the PV example: 0 = A1, 1 = A2, 2..4 = B1, 5..7 = B2.
constexpr int kA1 = 0, kA2 = 1, kB1 = 2, kB2 = 5;

}  // namespace

CoxeterMatrix build_rac_cube(int k) {
  if (k < 1) throw PreconditionError("cube needs at least one pair");
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) {
    names.push_back(upper(i));
    names.push_back(lower(i));
  }
  CoxeterMatrix m(names);
  for (std::size_t i = 0; i < m.rank(); ++i)
    for (std::size_t j = i + 1; j < m.rank(); ++j)
      m.set_label(i, j, i / 2 == j / 2 ? EdgeLabel::infinity() : EdgeLabel::finite(2));
  return m;
}

CoxeterMatrix build_pv_example(int pairs) {
  if (pairs != 8 && pairs != 12) throw PreconditionError("PV example uses 8 or 12 pairs");
  CoxeterMatrix m = build_rac_cube(pairs);
  for (int b = 0; b < 3; ++b) {
    m.set_label(upper(kA1), upper(kB1 + b), EdgeLabel::infinity());
    m.set_label(lower(kA1), lower(kB2 + b), EdgeLabel::infinity());
    m.set_label(upper(kA2), upper(kB2 + b), EdgeLabel::infinity());
    m.set_label(lower(kA2), lower(kB1 + b), EdgeLabel::infinity());
  }
  return m;
}

Mask pv_a_block(const CoxeterMatrix& m) {
  return m.mask_of({upper(kA1), lower(kA1), upper(kA2), lower(kA2)});
}

Mask pv_b_block(const CoxeterMatrix& m) {
  Mask s = 0;
  for (int i = kB1; i < kB2 + 3; ++i) s |= m.mask_of({upper(i), lower(i)});
  return s;
}

CoxeterMatrix build_ideal_octahedron() {
  std::vector<std::string> names;
  for (int f = 0; f < 8; ++f) names.push_back("f" + std::to_string(f >> 2 & 1) + std::to_string(f >> 1 & 1) +
                                              std::to_string(f & 1));
  CoxeterMatrix m(names);
  for (int f = 0; f < 8; ++f)
    for (int g = f + 1; g < 8; ++g)
      m.set_label(static_cast<std::size_t>(f), static_cast<std::size_t>(g),
                  popcount(static_cast<Mask>(f ^ g)) == 1 ? EdgeLabel::finite(2) : EdgeLabel::infinity());
  return m;
}

CoxeterMatrix build_truncated_ideal_octahedron() {
  CoxeterMatrix m = build_ideal_octahedron();
  for (int axis = 0; axis < 3; ++axis)
    for (int sign = 0; sign < 2; ++sign) {
      const auto v = m.add_generator("v" + std::to_string(axis) + (sign ? "-" : "+"));
      for (std::size_t u = 0; u < v; ++u) {
        const auto& n = m.name(u);
        const bool at_vertex = n[0] == 'f' && (n[1 + static_cast<std::size_t>(axis)] - '0') == sign;
        m.set_label(u, v, at_vertex ? EdgeLabel::finite(2) : EdgeLabel::infinity());
      }
    }
  return m;
}

}  // namespace coxkit
