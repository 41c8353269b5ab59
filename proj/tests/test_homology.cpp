#include <doctest.h>

#include <random>

#include "coxkit/errors.hpp"
#include "coxkit/homology.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace coxkit;

namespace {

std::vector<std::int64_t> snf_factors(const oracle::SmallMatrix& a) {
  IntegerMatrix m(a.size(), a.empty() ? 0 : a[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) m(i, j) = a[i][j];
  std::vector<std::int64_t> out;
  for (const auto& f : smith_normal_form(m).factors) out.push_back(static_cast<std::int64_t>(f));
  return out;
}

oracle::SmallMatrix random_small(std::mt19937& rng) {
  const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
  oracle::SmallMatrix a(r, std::vector<std::int64_t>(c));
  for (auto& row : a)
    for (auto& x : row) x = static_cast<std::int64_t>(rng() % 9) - 4;
  if (rng() % 4 == 0 && r > 1)
    for (std::size_t j = 0; j < c; ++j) a[r - 1][j] = 2 * a[0][j];  // force a dependency
  return a;
}

}  // namespace

TEST_SUITE("homology") {

TEST_CASE("Smith form of small matrices") {
  CHECK(smith_normal_form(IntegerMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}).factors ==
        std::vector<BigInt>{2, 6, 12});
  CHECK(smith_normal_form(IntegerMatrix{{0, 0}, {0, 0}}).rank == 0);
  CHECK(smith_normal_form(IntegerMatrix{{1, 1}, {1, -1}}).factors == std::vector<BigInt>{1, 2});
}

TEST_CASE("Smith form matches gcd of minors") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    auto a = random_small(rng);
    CHECK(snf_factors(a) == oracle::invariant_factors_by_minors(a));
  }
}

TEST_CASE("Smith form is invariant under unimodular row and column operations") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_small(rng);
    auto before = snf_factors(a);
    for (int step = 0; step < 6; ++step) {
      const std::size_t r = a.size(), c = a[0].size();
      const std::int64_t k = static_cast<std::int64_t>(rng() % 5) - 2;
      if (rng() % 2 && r > 1) {
        std::size_t i = rng() % r, j = (i + 1 + rng() % (r - 1)) % r;
        for (std::size_t x = 0; x < c; ++x) a[i][x] += k * a[j][x];
      } else if (c > 1) {
        std::size_t i = rng() % c, j = (i + 1 + rng() % (c - 1)) % c;
        for (std::size_t x = 0; x < r; ++x) a[x][i] += k * a[x][j];
      }
    }
    CHECK(snf_factors(a) == before);
  }
}

TEST_CASE("spheres") {
  for (int d = 1; d <= 4; ++d) {
    auto s = fixtures::simplex_boundary(d);
    CHECK(reduced_homology(s).is_sphere(d - 1));
    CHECK(is_ghs(s, d - 1).passed());
  }
  for (int d = 2; d <= 4; ++d) {
    auto s = fixtures::cross_polytope_boundary(d);
    CHECK(reduced_homology(s).is_sphere(d - 1));
    CHECK(is_ghs(s, d - 1).passed());
  }
  auto ico = SimplicialComplex::from_facets(fixtures::icosahedron_facets());
  CHECK(is_ghs(ico, 2).passed());
  CHECK_FALSE(is_ghs(ico, 3).passed());
}

TEST_CASE("torus and projective plane") {
  auto t = SimplicialComplex::from_facets(fixtures::torus7_facets());
  auto h = reduced_homology(t);
  CHECK(h.at(1).betti == 2);
  CHECK(h.at(2).betti == 1);
  CHECK_FALSE(is_ghs(t, 2).passed());

  auto p = SimplicialComplex::from_facets(fixtures::rp2_6_facets());
  auto hp = reduced_homology(p);
  CHECK(hp.at(1).betti == 0);
  CHECK(hp.at(1).torsion == std::vector<BigInt>{2});
  CHECK(hp.at(2).trivial());
  CHECK_FALSE(is_ghs(p, 2).passed());
}

TEST_CASE("Euler characteristic agrees with Betti numbers") {
  std::vector<SimplicialComplex> cs{SimplicialComplex::from_facets(fixtures::torus7_facets()),
                                    SimplicialComplex::from_facets(fixtures::rp2_6_facets()),
                                    SimplicialComplex::from_facets(fixtures::icosahedron_facets()),
                                    fixtures::cross_polytope_boundary(4)};
  for (const auto& c : cs) {
    long long chi = 0;
    for (int k = 0; k <= c.dimension(); ++k) chi += (k % 2 ? -1 : 1) * static_cast<long long>(c.simplices_of_dim(k).size());
    long long betti = 1;  // reduced homology: chi = 1 + sum (-1)^k b~_k
    auto h = reduced_homology(c);
    for (int k = 0; k <= c.dimension(); ++k) betti += (k % 2 ? -1 : 1) * static_cast<long long>(h.at(k).betti);
    CHECK(chi == betti);
  }
}

TEST_CASE("free face is not a homology manifold") {
  // Two triangles sharing an edge: a disk.
  auto disk = SimplicialComplex::from_facets({{0, 1, 2}, {1, 2, 3}});
  auto r = is_ghs(disk, 2);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(is_ghs(disk, 1).passed());
}

TEST_CASE("links") {
  auto oct = fixtures::cross_polytope_boundary(3);
  auto l = link(oct, oct.mask_of({"0"}));
  CHECK(reduced_homology(l).is_sphere(1));
  CHECK(l.facets().size() == 4);
  CHECK_THROWS_AS(link(oct, oct.mask_of({"0", "1"})), PreconditionError);
}

TEST_CASE("void complex is the (-1)-sphere") {
  SimplicialComplex empty({}, {});
  CHECK(reduced_homology(empty).is_sphere(-1));
}

}
