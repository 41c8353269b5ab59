#include <doctest.h>

#include <algorithm>
#include <deque>
#include <random>

#include "coxkit/classify.hpp"
#include "coxkit/errors.hpp"
#include "coxkit/examples.hpp"
#include "coxkit/weights.hpp"
#include "fixtures.hpp"

using namespace coxkit;

namespace {

PolytopeModel model(const CoxeterMatrix& m, int dim, bool validate = true) {
  return build_polytope(mark_cone_vertices(build_nerve(m), dim), dim, validate);
}

// Independent sigma: walk the edges of F_T (faces two generators above T)
// and weigh the BFS distance of the added pair inside the edge diagram.
Rational sigma_by_edges(const PolytopeModel& p, Mask t) {
  const auto& m = p.matrix();
  Rational s = 0;
  for (Mask e : p.faces()) {
    if ((e & t) != t || popcount(e) != popcount(t) + 2) continue;
    const auto uv = members(e & ~t);
    std::vector<int> d(m.rank(), -1);
    std::deque<std::size_t> q{uv[0]};
    d[uv[0]] = 0;
    while (!q.empty()) {
      auto x = q.front();
      q.pop_front();
      for (auto y : members(e))
        if (d[y] < 0 && m.label(x, y) != EdgeLabel::finite(2)) {
          d[y] = d[x] + 1;
          q.push_back(y);
        }
    }
    const int dist = d[uv[1]];
    if (dist >= 0 && dist <= 7) s += 1;
    else if (dist >= 8 && dist <= 15) s += Rational(1, 3);
  }
  return s;
}

CoxeterMatrix relabel(const CoxeterMatrix& m, std::mt19937& rng, std::vector<std::size_t>& perm) {
  perm.resize(m.rank());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::string> names(m.rank());
  for (std::size_t i = 0; i < m.rank(); ++i) names[perm[i]] = "r" + m.name(i);
  CoxeterMatrix out(names);
  for (std::size_t i = 0; i < m.rank(); ++i)
    for (std::size_t j = i + 1; j < m.rank(); ++j) out.set_label(perm[i], perm[j], m.label(i, j));
  return out;
}

}  // namespace

TEST_SUITE("weights") {

TEST_CASE("weight thresholds") {
  CHECK(weight(1) == 1);
  CHECK(weight(7) == 1);
  CHECK(weight(8) == Rational(1, 3));
  CHECK(weight(15) == Rational(1, 3));
  CHECK(weight(16) == 0);
  CHECK(weight(std::nullopt) == 0);
  for (int d = 0; d < 40; ++d) {
    CHECK(weight(d + 1) <= weight(d));
    if (d >= 16) CHECK(weight(d) == weight(16));
  }
}

TEST_CASE("edge sums") {
  auto a4 = fixtures::path_diagram({3, 3, 3});
  auto s = sigma_edge(a4, a4.all(), 5);
  CHECK(s.value == 6);
  CHECK(s.bound == Rational(29 * 4, 3));
  CHECK(s.ok);
  auto a2a1 = fixtures::path_diagram({3, 2});
  CHECK(sigma_edge(a2a1, a2a1.all(), 4).value == 1);
  CHECK_THROWS_AS(sigma_edge(a4, a4.all(), 4), PreconditionError);
  CHECK_THROWS_AS(sigma_edge(fixtures::path_diagram({0}), 3, 3), PreconditionError);
}

TEST_CASE("edge sums of elliptic templates stay under the bound") {
  for (const auto& t : template_catalogue(9, 12)) {
    if (!t.diagram.rank() || t.kind != DiagramKind::Elliptic) continue;
    auto s = sigma_edge(t.diagram, t.diagram.all(), static_cast<int>(t.diagram.rank()) + 1);
    INFO(t.family);
    CHECK(s.ok);
  }
}

TEST_CASE("face sums against edge enumeration") {
  std::vector<PolytopeModel> models{
      model(fixtures::tetrahedron_535(), 3),          model(fixtures::path_diagram({5, 3, 3, 3}), 4),
      model(fixtures::prism_group(), 3),              model(fixtures::bipyramid_group(), 3),
      model(fixtures::capped_cusp_group(), 3),        model(build_ideal_octahedron(), 3),
      model(build_rac_cube(4), 4, false),
  };
  for (const auto& p : models)
    for (Mask t : p.faces_of_dim(3)) CHECK(sigma_face(p, t) == sigma_by_edges(p, t));
  CHECK(sigma_face(models[0], 0) == 3);
  CHECK(sigma_face(models[2], 0) == 3);
}

TEST_CASE("angle diagrams") {
  auto c5 = model(build_rac_cube(5), 5, false);
  const Mask t = c5.matrix().mask_of({"u0", "u1"});
  auto a = angle_diagram(c5, t, c5.matrix().index_of("u2"), c5.matrix().index_of("u3"));
  CHECK(a.diagram.rank() == 4);
  CHECK(classify(a.diagram).elliptic());
  CHECK(weight(a) == 0);
  CHECK_THROWS_AS(angle_diagram(c5, t, c5.matrix().index_of("u2"), c5.matrix().index_of("l2")), PreconditionError);

  auto io = model(build_ideal_octahedron(), 3);
  auto b = angle_diagram(io, 0, io.matrix().index_of("f000"), io.matrix().index_of("f001"));
  CHECK(b.diagram.rank() == 2);
}

TEST_CASE("bad face detection") {
  auto bp = model(fixtures::bipyramid_group(), 3);
  CHECK(f_vector(bp).a == std::vector<long long>{2, 9, 6});
  CHECK(f_vector(bp).c == 3);
  CHECK(is_bad_3face(bp, 0));
  CHECK(matches_shape(shape_poset(bad_face_shape()), bad_face_shape()));
  CHECK_FALSE(is_bad_3face(model(build_rac_cube(3), 3, false), 0));
  CHECK_FALSE(is_bad_3face(model(fixtures::tetrahedron_535(), 3), 0));
  CHECK_FALSE(is_bad_3face(model(build_ideal_octahedron(), 3), 0));
  // An all-finite bipyramid poset is not the bad face.
  ShapeTemplate finite = bad_face_shape();
  finite.kinds = "fffff";
  CHECK_FALSE(matches_shape(shape_poset(finite), bad_face_shape()));
}

TEST_CASE("small face shapes are distinct polyhedra") {
  const auto& shapes = small_face_shapes();
  CHECK(shapes.size() == 9);
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    auto p = shape_poset(shapes[i]);
    const long long v = static_cast<long long>(p.cusp.size()), e = static_cast<long long>(p.edges.size()),
                    f = static_cast<long long>(p.faces.size());
    INFO(shapes[i].name);
    CHECK(v - e + f == 2);
    CHECK(f <= 6);
    // Each edge lies on exactly two faces.
    std::vector<int> on(p.edges.size(), 0);
    for (const auto& face : p.faces)
      for (int x : face) ++on[static_cast<std::size_t>(x)];
    CHECK(std::all_of(on.begin(), on.end(), [](int c) { return c == 2; }));
    for (std::size_t j = 0; j < shapes.size(); ++j) CHECK(matches_shape(p, shapes[j]) == (i == j));
  }
}

TEST_CASE("case shapes of concrete faces") {
  auto name_of = [](const PolytopeModel& p) {
    for (const auto& s : small_face_shapes())
      if (matches_shape(face_poset(p, 0), s)) return s.name;
    return std::string("none");
  };
  CHECK(name_of(model(fixtures::tetrahedron_535(), 3)) == "a");
  CHECK(name_of(model(fixtures::prism_group(), 3)) == "b");
  CHECK(name_of(model(fixtures::capped_cusp_group(), 3)) == "g");
  CHECK(name_of(model(build_rac_cube(3), 3, false)) == "d");
}

TEST_CASE("K' types") {
  auto tet = model(fixtures::tetrahedron_535(), 3);
  CHECK(classify_Kprime(tet, 0, {1, 2, 4, 8}) == KprimeType::Type1);
  CHECK(classify_Kprime(tet, 0, {1, 2, 4}) == KprimeType::None);

  auto prism = model(fixtures::prism_group(), 3);
  const auto& pm = prism.matrix();
  CHECK(classify_Kprime(prism, 0, {pm.mask_of({"p"}), pm.mask_of({"q"}), pm.mask_of({"r"})}) == KprimeType::Type2);
  CHECK(classify_Kprime(prism, 0, {pm.mask_of({"t"}), pm.mask_of({"p"}), pm.mask_of({"q"})}) == KprimeType::None);

  auto cc = model(fixtures::capped_cusp_group(), 3);
  const auto& ym = cc.matrix();
  CHECK(classify_Kprime(cc, 0, {ym.mask_of({"a"}), ym.mask_of({"b"}), ym.mask_of({"c"})}) == KprimeType::Type3);
  CHECK(classify_Kprime(cc, 0, {ym.mask_of({"a"}), ym.mask_of({"x"}), ym.mask_of({"c"})}) == KprimeType::None);

  auto cube = model(build_rac_cube(3), 3, false);
  const auto& cm = cube.matrix();
  CHECK(classify_Kprime(cube, 0, {cm.mask_of({"u0"}), cm.mask_of({"l0"}), cm.mask_of({"u1"}), cm.mask_of({"l1"})}) ==
        KprimeType::Type4);
  CHECK(classify_Kprime(cube, 0, {cm.mask_of({"u0"}), cm.mask_of({"u1"}), cm.mask_of({"u2"})}) == KprimeType::None);
  CHECK_THROWS_AS(classify_Kprime(cube, 0, {cm.mask_of({"u0", "u1"})}), PreconditionError);
}

TEST_CASE("K' types are invariant under relabeling") {
  std::mt19937 rng(23);
  std::vector<std::pair<CoxeterMatrix, bool>> bases{{fixtures::tetrahedron_535(), true},
                                                    {fixtures::prism_group(), true},
                                                    {fixtures::capped_cusp_group(), true},
                                                    {build_rac_cube(3), false}};
  for (const auto& [m, validate] : bases) {
    auto p = model(m, 3, validate);
    const auto two = p.faces_of_dim(2);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<std::size_t> perm;
      auto q = model(relabel(m, rng, perm), 3, validate);
      for (Mask sel = 1; sel < (Mask{1} << two.size()); ++sel) {
        if (popcount(sel) < 3 || popcount(sel) > 4) continue;
        std::vector<Mask> k1, k2;
        for (auto i : members(sel)) {
          k1.push_back(two[i]);
          k2.push_back(bit(perm[members(two[i]).front()]));
        }
        CHECK(classify_Kprime(p, 0, k1) == classify_Kprime(q, 0, k2));
      }
    }
  }
}

TEST_CASE("good face audit") {
  auto tet = model(fixtures::tetrahedron_535(), 3);
  CHECK(good_face_audit(tet).passed());
  auto prism = model(fixtures::prism_group(), 3);
  CHECK(good_face_audit(prism).passed());
  auto cube = model(build_rac_cube(3), 3, false);
  auto r = good_face_audit(cube);
  CHECK_FALSE(r.passed());
  auto bp = good_face_audit(model(fixtures::bipyramid_group(), 3));
  CHECK(bp.findings.empty());
}

TEST_CASE("bad face ratio") {
  CHECK_THROWS_AS(bad_ratio_threshold(7), PreconditionError);
  CHECK(bad_ratio_threshold(10) == Rational(9, 7));
  CHECK(bad_ratio_threshold(9) == Rational(36, 28));
  CHECK(bad_ratio_audit(10, 2, 1).passed());
  CHECK(bad_ratio_audit(10, 5, 0).passed());
  CHECK_THROWS_AS(bad_ratio_audit(10, 1, 2), PreconditionError);
  auto c8 = model(build_rac_cube(8), 8, false);
  auto counts = bad_face_counts(c8);
  CHECK(counts.alpha3 == 1792);
  CHECK(counts.bad == 0);
  CHECK(bad_ratio_audit(c8).passed());
}

TEST_CASE("general bound") {
  CHECK(general_bound(Rational(29, 3)) == 996);
  CHECK(general_bound(0) == 68);
  CHECK(general_bound(1) == 164);
  CHECK_THROWS_AS(general_bound(-1), PreconditionError);
}

}
