#include <mutex>

#include "coxkit/classify.hpp"
#include "coxkit/errors.hpp"

namespace coxkit {

namespace {

CoxeterMatrix blank(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return CoxeterMatrix(std::move(names));
}

EdgeLabel L(int m) { return EdgeLabel::finite(m); }

// Path x0 - x1 - ... with the given labels.
CoxeterMatrix path(const std::vector<int>& labels) {
  auto m = blank(labels.size() + 1);
  for (std::size_t i = 0; i < labels.size(); ++i) m.set_label(i, i + 1, L(labels[i]));
  return m;
}

// Centre x0 with three arms of the given lengths, all labels 3.
CoxeterMatrix tripod(std::size_t a, std::size_t b, std::size_t c) {
  auto m = blank(1 + a + b + c);
  std::size_t next = 1;
  for (auto len : {a, b, c}) {
    std::size_t prev = 0;
    for (std::size_t k = 0; k < len; ++k) {
      m.set_label(prev, next, L(3));
      prev = next++;
    }
  }
  return m;
}

CoxeterMatrix cycle(std::size_t n) {
  auto m = blank(n);
  for (std::size_t i = 0; i < n; ++i) m.set_label(i, (i + 1) % n, L(3));
  return m;
}

std::vector<int> threes(std::size_t k) { return std::vector<int>(k, 3); }

std::string num(std::size_t n) { return std::to_string(n); }

void elliptic_of_rank(std::size_t r, int max_dihedral, std::vector<Template>& out) {
  constexpr auto E = DiagramKind::Elliptic;
  if (r == 1) {
    out.push_back({"A1", E, blank(1)});
    return;
  }
  if (r == 2) {
    out.push_back({"A2", E, path({3})});
    out.push_back({"B2", E, path({4})});
    for (int m = 5; m <= max_dihedral; ++m)
      out.push_back({m == 6 ? "G2" : "I2(" + std::to_string(m) + ")", E, path({m})});
    return;
  }
  out.push_back({"A" + num(r), E, path(threes(r - 1))});
  auto b = threes(r - 1);
  b.front() = 4;
  out.push_back({"B" + num(r), E, path(b)});
  if (r >= 4) out.push_back({"D" + num(r), E, tripod(1, 1, r - 3)});
  if (r >= 6 && r <= 8) out.push_back({"E" + num(r), E, tripod(1, 2, r - 4)});
  if (r == 4) out.push_back({"F4", E, path({3, 4, 3})});
  if (r == 3) out.push_back({"H3", E, path({5, 3})});
  if (r == 4) out.push_back({"H4", E, path({5, 3, 3})});
}

// Affine family ~X_k lives on k+1 vertices.
void parabolic_of_rank(std::size_t r, std::vector<Template>& out) {
  constexpr auto P = DiagramKind::Parabolic;
  if (r < 2) return;
  const std::size_t k = r - 1;
  if (r == 2) {
    auto m = blank(2);
    m.set_label(0, 1, EdgeLabel::infinity());
    out.push_back({"~A1", P, m});
    return;
  }
  out.push_back({"~A" + num(k), P, cycle(r)});
  if (k >= 3) {
    // Fork at one end, a 4 on the last edge of the long arm.
    auto m = tripod(1, 1, k - 2);
    const std::size_t tail_parent = k == 3 ? 0 : r - 2;
    m.set_label(tail_parent, r - 1, L(4));
    out.push_back({"~B" + num(k), P, m});
  }
  {
    auto c = threes(k);
    c.front() = 4;
    c.back() = 4;
    out.push_back({"~C" + num(k), P, path(c)});
  }
  if (k == 4) {
    auto m = blank(5);
    for (std::size_t i = 1; i < 5; ++i) m.set_label(0, i, L(3));
    out.push_back({"~D4", P, m});
  } else if (k >= 5) {
    // Chain x0..x(k-4), two leaves on each end.
    auto m = path(threes(k - 4));
    const std::size_t last = k - 4;
    for (int i = 0; i < 4; ++i) m.add_generator("y" + std::to_string(i));
    m.set_label(0, last + 1, L(3));
    m.set_label(0, last + 2, L(3));
    m.set_label(last, last + 3, L(3));
    m.set_label(last, last + 4, L(3));
    out.push_back({"~D" + num(k), P, m});
  }
  if (k == 2) out.push_back({"~G2", P, path({6, 3})});
  if (k == 4) out.push_back({"~F4", P, path({3, 3, 4, 3})});
  if (k == 6) out.push_back({"~E6", P, tripod(2, 2, 2)});
  if (k == 7) out.push_back({"~E7", P, tripod(1, 3, 3)});
  if (k == 8) out.push_back({"~E8", P, tripod(1, 2, 5)});
}

}  // namespace

std::vector<Template> templates_of_rank(std::size_t vertices, int max_dihedral) {
  std::vector<Template> out;
  elliptic_of_rank(vertices, max_dihedral, out);
  parabolic_of_rank(vertices, out);
  return out;
}

std::vector<Template> template_catalogue(std::size_t max_vertices, int max_dihedral) {
  std::vector<Template> out;
  for (std::size_t r = 1; r <= max_vertices; ++r) {
    auto t = templates_of_rank(r, max_dihedral);
    out.insert(out.end(), std::make_move_iterator(t.begin()), std::make_move_iterator(t.end()));
  }
  return out;
}

}  // namespace coxkit
