#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coxkit/diagram.hpp"
#include "coxkit/nerve.hpp"

namespace fixtures {

using Facets = std::vector<std::vector<int>>;

inline void choose(int n, int k, int from, std::vector<int>& cur, Facets& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = from; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Boundary of the d-simplex: a (d-1)-sphere on d+1 vertices.
inline coxkit::SimplicialComplex simplex_boundary(int d) {
  Facets f;
  std::vector<int> cur;
  choose(d + 1, d, 0, cur, f);
  return coxkit::SimplicialComplex::from_facets(f);
}

// Boundary of the d-dimensional cross-polytope; vertices 2i and 2i+1 are opposite.
inline coxkit::SimplicialComplex cross_polytope_boundary(int d) {
  Facets f;
  for (int bits = 0; bits < (1 << d); ++bits) {
    std::vector<int> s;
    for (int i = 0; i < d; ++i) s.push_back(2 * i + (bits >> i & 1));
    f.push_back(s);
  }
  return coxkit::SimplicialComplex::from_facets(f);
}

// 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom.
inline Facets icosahedron_facets() {
  Facets f;
  for (int i = 0; i < 5; ++i) {
    int u = 1 + i, u1 = 1 + (i + 1) % 5, l = 6 + i, l1 = 6 + (i + 1) % 5;
    f.push_back({0, u, u1});
    f.push_back({u, u1, l});
    f.push_back({l, l1, u1});
    f.push_back({11, l, l1});
  }
  return f;
}

inline Facets torus7_facets() {
  Facets f;
  for (int i = 0; i < 7; ++i) {
    f.push_back({i, (i + 1) % 7, (i + 3) % 7});
    f.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return f;
}

inline Facets rp2_6_facets() {
  return {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
          {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}};
}

// Right-angled group whose nerve is the simplicial complex with these
// facets (which must be flag): label 2 on edges, inf elsewhere.
inline coxkit::CoxeterMatrix right_angled_from_facets(const Facets& facets) {
  std::set<int> verts;
  std::set<std::pair<int, int>> edges;
  for (const auto& s : facets)
    for (std::size_t i = 0; i < s.size(); ++i) {
      verts.insert(s[i]);
      for (std::size_t j = i + 1; j < s.size(); ++j) edges.insert(std::minmax(s[i], s[j]));
    }
  std::vector<std::string> names;
  for (int v : verts) names.push_back("x" + std::to_string(v));
  coxkit::CoxeterMatrix m(names);
  for (auto a = verts.begin(); a != verts.end(); ++a)
    for (auto b = std::next(a); b != verts.end(); ++b)
      m.set_label("x" + std::to_string(*a), "x" + std::to_string(*b),
                  edges.count({*a, *b}) ? coxkit::EdgeLabel::finite(2) : coxkit::EdgeLabel::infinity());
  return m;
}

// Right-angled group of the dodecahedron.
inline coxkit::CoxeterMatrix dodecahedron_group() { return right_angled_from_facets(icosahedron_facets()); }

// Triangular bipyramid: faces N01.. around the north apex, S01.. around the
// south one; three equatorial ideal vertices.
inline coxkit::CoxeterMatrix bipyramid_group() {
  coxkit::CoxeterMatrix m({"N01", "N12", "N20", "S01", "S12", "S20"});
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) {
      const bool same_apex = (i < 3) == (j < 3), same_edge = i % 3 == j % 3;
      m.set_label(i, j, same_apex || same_edge ? coxkit::EdgeLabel::finite(2) : coxkit::EdgeLabel::infinity());
    }
  return m;
}

// Triangular prism: top/bottom faces t, b; lateral faces p, q, r with
// dihedral labels 3, 3, 4 between them, so they share no vertex.
inline coxkit::CoxeterMatrix prism_group() {
  coxkit::CoxeterMatrix m({"t", "b", "p", "q", "r"});
  m.set_label("t", "b", coxkit::EdgeLabel::infinity());
  m.set_label("p", "q", coxkit::EdgeLabel::finite(3));
  m.set_label("q", "r", coxkit::EdgeLabel::finite(3));
  m.set_label("p", "r", coxkit::EdgeLabel::finite(4));
  return m;
}

// Polyhedron with one ideal vertex where a, x, c, y meet; x and y are
// triangles, b sits under x and d under y. Labels 3 on the a/c belt keep
// {a,c,y,b} and {a,c,x,d} from being flats, so the complement of the cusp
// flat stays connected and no generator is a cone over it. (With right
// angles the same faces K' = a, b, c force a pyramid.)
inline coxkit::CoxeterMatrix capped_cusp_group() {
  coxkit::CoxeterMatrix m({"a", "c", "x", "y", "b", "d"});
  for (auto [u, v] : {std::pair{"a", "c"}, {"x", "y"}, {"x", "d"}, {"y", "b"}})
    m.set_label(u, v, coxkit::EdgeLabel::infinity());
  for (auto [u, v] : {std::pair{"a", "b"}, {"c", "b"}, {"a", "d"}, {"c", "d"}})
    m.set_label(u, v, coxkit::EdgeLabel::finite(3));
  return m;
}

// Compact hyperbolic tetrahedron with linear diagram [5,3,5].
inline coxkit::CoxeterMatrix tetrahedron_535() {
  coxkit::CoxeterMatrix m({"a", "b", "c", "d"});
  m.set_label("a", "b", coxkit::EdgeLabel::finite(5));
  m.set_label("b", "c", coxkit::EdgeLabel::finite(3));
  m.set_label("c", "d", coxkit::EdgeLabel::finite(5));
  return m;
}

inline coxkit::CoxeterMatrix path_diagram(const std::vector<int>& labels) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= labels.size(); ++i) names.push_back("s" + std::to_string(i));
  coxkit::CoxeterMatrix m(names);
  for (std::size_t i = 0; i < labels.size(); ++i)
    m.set_label(i, i + 1, labels[i] == 0 ? coxkit::EdgeLabel::infinity() : coxkit::EdgeLabel::finite(labels[i]));
  return m;
}

}  // namespace fixtures
